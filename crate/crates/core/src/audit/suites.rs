use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::audit::{AuditReport, AuditRow};
use crate::error::{Error, Result};
use crate::generators::{
    complete, complete_bipartite, cycle, directed_cycle, directed_path, orient_by_labeling, orient_left_right, path,
    random_connected, random_connected_with_cut_edge, random_digraph, random_graph, random_multigraph_with_cut_edge,
    random_tournament, random_tree, star, transitive_tournament, EdgeDensity,
};
use crate::graph::{DegreeMode, DegreeStep, Digraph, EditOp, Graph, Vertex};
use crate::irregularity::{
    exact_arc_delta_for_edit, exact_delta_for_edit, irr_digraph_naive, irr_naive, IncrementalIrr, IrrPair,
};
use crate::partitions::{arc_partition, joint_partition, transform_counts};
use crate::predictors::{
    arc_transform_predict, directed_cycle_irr, directed_path_irr, edge_transform_predict, joint_final_deltas,
    joint_interim_delta, left_right_bipartite_irr, regular_joint_irr, transitive_tournament_irr, FormulaId, PathReversal,
    Prediction,
};
use crate::rng::SplitMix64;
use crate::transforms::{disjoint_union, edge_joint, edge_transformation_op, ArcEnd};

/// Upper bound on vertex counts in the random suites.
pub const MAX_RANDOM_N: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    EdgeJoint,
    EdgeTransform,
    ArcTransform,
    ClosedForms,
    BranchTransform,
    JointInvariance,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::EdgeJoint,
        Suite::EdgeTransform,
        Suite::ArcTransform,
        Suite::ClosedForms,
        Suite::BranchTransform,
        Suite::JointInvariance,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::EdgeJoint => "edge-joint",
            Suite::EdgeTransform => "edge-transform",
            Suite::ArcTransform => "arc-transform",
            Suite::ClosedForms => "closed-forms",
            Suite::BranchTransform => "branch-transform",
            Suite::JointInvariance => "joint-invariance",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown suite {s:?}")))
    }
}

/// Runs `suite`. For the closed-form suite `instances` is the largest `n`.
pub fn run_suite(suite: Suite, instances: usize, seed: u64) -> AuditReport {
    match suite {
        Suite::EdgeJoint => run_edge_joint_suite(instances, seed),
        Suite::EdgeTransform => run_edge_transform_suite(instances, seed),
        Suite::ArcTransform => run_arc_transform_suite(instances, seed),
        Suite::ClosedForms => run_closed_form_suite(instances),
        Suite::BranchTransform => run_branch_transform_suite(instances, seed),
        Suite::JointInvariance => run_joint_invariance_suite(instances, seed),
    }
}

fn oracle(g: &Graph) -> u64 {
    irr_naive(&g.degree_multiset())
}

fn instance_seeds(count: usize, seed: u64) -> Vec<u64> {
    let mut master = SplitMix64::new(seed);
    (0..count).map(|_| master.next_u64()).collect()
}

fn config(count: usize, entries: &[(&str, &str)]) -> BTreeMap<String, String> {
    let mut map: BTreeMap<String, String> =
        entries.iter().map(|&(k, v)| (k.to_string(), v.to_string())).collect();
    map.insert("count".to_string(), count.to_string());
    map.insert("rng".to_string(), "splitmix64".to_string());
    map
}

fn er_name(n: usize, density: EdgeDensity) -> String {
    format!("er(n={n} p=0.{})", density.tenths())
}

// ---------------------------------------------------------------- joints

fn random_regular(rng: &mut SplitMix64) -> (String, Graph) {
    match rng.below(5) {
        0 => ("K1".to_string(), complete(1)),
        1 => ("K2".to_string(), complete(2)),
        2 => {
            let k = rng.range_inclusive(3, MAX_RANDOM_N);
            (format!("C{k}"), cycle(k).expect("k >= 3"))
        }
        3 => {
            let k = rng.range_inclusive(1, MAX_RANDOM_N);
            (format!("K{k}"), complete(k))
        }
        _ => {
            let k = rng.range_inclusive(1, MAX_RANDOM_N / 2);
            (format!("K{k},{k}"), complete_bipartite(k, k))
        }
    }
}

fn joint_row(id: u64, seed: u64, left: (&str, &Graph), right: (&str, &Graph), u: Vertex, v: Vertex) -> AuditRow {
    let (g1, g2) = (left.1, right.1);
    let union = disjoint_union(g1, g2);
    let op = EditOp::AddEdge { u, v: v + g1.vertex_count() };
    let joined = edge_joint(g1, g2, u, v).expect("endpoints chosen in range");
    let engine = exact_delta_for_edit(&union, &op).expect("joint edge is new");
    let mut row = AuditRow::new(
        id,
        seed,
        format!("joint({} u={u} | {} v={v}) {op}", left.0, right.0),
        oracle(&union),
        oracle(&joined),
        engine,
    );
    let (dm1, dm2) = (g1.degree_multiset(), g2.degree_multiset());
    let (du, dv) = (g1.degree(u), g2.degree(v));
    let p = joint_partition(&dm1, &dm2, du, dv).expect("endpoint degrees present");
    let (form_a, form_b) = joint_final_deltas(&p);
    row.predict(Prediction::new(FormulaId::JointInterim, joint_interim_delta(&p)));
    row.predict(Prediction::new(FormulaId::JointFinalA, form_a));
    row.predict(Prediction::new(FormulaId::JointFinalB, form_b));
    if dm1.is_regular() && dm2.is_regular() {
        let (r, s) = (g1.vertex_count(), g2.vertex_count());
        let prediction = if du >= dv { regular_joint_irr(r, s, du, dv) } else { regular_joint_irr(s, r, dv, du) };
        row.predict(prediction.expect("roles ordered by degree"));
    }
    row
}

/// Edge-joints of random component pairs. Rows 0..3 are fixed desk
/// instances (`C3~>C3`, `K1~>K1`, `K4~>C3`); every fourth row after that
/// pairs two regular graphs, the rest pair Erdős–Rényi graphs.
pub fn run_edge_joint_suite(count: usize, seed: u64) -> AuditReport {
    let mut rows = Vec::with_capacity(count);
    for (k, s) in instance_seeds(count, seed).into_iter().enumerate() {
        let id = k as u64;
        let mut rng = SplitMix64::new(s);
        let row = match k {
            0 => joint_row(id, s, ("C3", &cycle(3).unwrap()), ("C3", &cycle(3).unwrap()), 0, 0),
            1 => joint_row(id, s, ("K1", &complete(1)), ("K1", &complete(1)), 0, 0),
            2 => joint_row(id, s, ("K4", &complete(4)), ("C3", &cycle(3).unwrap()), 0, 0),
            _ if k % 4 == 3 => {
                let mut a = random_regular(&mut rng);
                let mut b = random_regular(&mut rng);
                if a.1.degree(0) < b.1.degree(0) {
                    std::mem::swap(&mut a, &mut b);
                }
                let u = rng.below(a.1.vertex_count());
                let v = rng.below(b.1.vertex_count());
                joint_row(id, s, (&a.0, &a.1), (&b.0, &b.1), u, v)
            }
            _ => {
                let (n1, p1) = (rng.range_inclusive(1, MAX_RANDOM_N), EdgeDensity::random(&mut rng));
                let g1 = random_graph(n1, p1, &mut rng);
                let (n2, p2) = (rng.range_inclusive(1, MAX_RANDOM_N), EdgeDensity::random(&mut rng));
                let g2 = random_graph(n2, p2, &mut rng);
                let u = rng.below(n1);
                let v = rng.below(n2);
                joint_row(id, s, (&er_name(n1, p1), &g1), (&er_name(n2, p2), &g2), u, v)
            }
        };
        rows.push(row);
    }
    let cfg = config(
        count,
        &[
            ("n_range", "1..=40"),
            ("densities", "0.2,0.5,0.8"),
            ("regular_families", "K1,K2,Ck,Kk,Kk,k"),
            ("regular_every", "4"),
        ],
    );
    AuditReport::build(Suite::EdgeJoint.name(), seed, cfg, rows, Vec::new())
}

// ------------------------------------------------------- joint invariance

/// Pairs of joints at degree-matched endpoints: with `d(u_i) = d(v_j)` and
/// `d(u_k) = d(v_l)`, the joint at `u_i v_l` is compared with the joint at
/// `u_k v_j`. The row measures the first joint; the prediction is the
/// irregularity of the second, and only counts as agreeing when the two
/// degree multisets coincide as well.
pub fn run_joint_invariance_suite(count: usize, seed: u64) -> AuditReport {
    let mut rows = Vec::with_capacity(count);
    for (k, s) in instance_seeds(count, seed).into_iter().enumerate() {
        let mut rng = SplitMix64::new(s);
        loop {
            let (n1, p1) = (rng.range_inclusive(1, MAX_RANDOM_N), EdgeDensity::random(&mut rng));
            let g1 = random_graph(n1, p1, &mut rng);
            let (n2, p2) = (rng.range_inclusive(1, MAX_RANDOM_N), EdgeDensity::random(&mut rng));
            let g2 = random_graph(n2, p2, &mut rng);
            let (dm1, dm2) = (g1.degree_multiset(), g2.degree_multiset());
            let shared: Vec<usize> = dm1.entries().iter().map(|&(d, _)| d).filter(|&d| dm2.contains(d)).collect();
            if shared.is_empty() {
                continue;
            }
            let x = *rng.pick(&shared).unwrap();
            let y = *rng.pick(&shared).unwrap();
            let with_degree = |g: &Graph, d: usize| -> Vec<Vertex> {
                (0..g.vertex_count()).filter(|&w| g.degree(w) == d).collect()
            };
            let u_i = *rng.pick(&with_degree(&g1, x)).unwrap();
            let v_j = *rng.pick(&with_degree(&g2, x)).unwrap();
            let u_k = *rng.pick(&with_degree(&g1, y)).unwrap();
            let v_l = *rng.pick(&with_degree(&g2, y)).unwrap();

            let union = disjoint_union(&g1, &g2);
            let op = EditOp::AddEdge { u: u_i, v: v_l + n1 };
            let first = edge_joint(&g1, &g2, u_i, v_l).unwrap();
            let second = edge_joint(&g1, &g2, u_k, v_j).unwrap();
            let mut row = AuditRow::new(
                k as u64,
                s,
                format!(
                    "joint({} | {}) u_i={u_i} v_l={v_l} vs u_k={u_k} v_j={v_j}",
                    er_name(n1, p1),
                    er_name(n2, p2)
                ),
                oracle(&union),
                oracle(&first),
                exact_delta_for_edit(&union, &op).unwrap(),
            );
            let prediction = Prediction::new(FormulaId::JointInvariance, oracle(&second) as i64);
            let agrees = prediction.agrees_with(row.irr_before, row.irr_after_oracle)
                && first.degree_multiset() == second.degree_multiset();
            row.predict_with(prediction, agrees);
            rows.push(row);
            break;
        }
    }
    let cfg = config(count, &[("n_range", "1..=40"), ("densities", "0.2,0.5,0.8")]);
    AuditReport::build(Suite::JointInvariance.name(), seed, cfg, rows, Vec::new())
}

// ------------------------------------------------------ edge transforms

/// `ends` is `(u1, v1, u_i)`: the edge `u1 v1` becomes `u_i v1`.
fn transform_row(id: u64, seed: u64, label: &str, g: &Graph, ends: (Vertex, Vertex, Vertex), op: EditOp) -> AuditRow {
    let (u1, v1, u_i) = ends;
    let after = g.apply_edit(&op).expect("transformation preconditions hold");
    let before = oracle(g);
    let mut row = AuditRow::new(
        id,
        seed,
        format!("{label} cut=({u1} {v1}) target={u_i} {op}"),
        before,
        oracle(&after),
        exact_delta_for_edit(g, &op).expect("validated edit"),
    );
    let counts = transform_counts(&g.degree_multiset(), g.degree(u1), g.degree(u_i)).expect("degrees present");
    row.predict(edge_transform_predict(before, &counts));
    row
}

fn cut_edge_row(id: u64, seed: u64, label: &str, g: &Graph, u1: Vertex, v1: Vertex, u_i: Vertex) -> AuditRow {
    let op = edge_transformation_op(g, u1, v1, u_i).expect("valid cut-edge transformation");
    transform_row(id, seed, label, g, (u1, v1, u_i), op)
}

fn random_master_target(g: &Graph, u1: Vertex, v1: Vertex, rng: &mut SplitMix64) -> Vertex {
    let master = g.master_side(u1, v1).expect("planted cut edge");
    let candidates: Vec<Vertex> = (0..g.vertex_count()).filter(|&x| master[x] && x != u1).collect();
    *rng.pick(&candidates).expect("master side has at least two vertices")
}

/// Edge-transformations. Rows 0..3 are the desk instances `P4`, `K1,3` and
/// two joined triangles. Random rows rotate through a simple graph with a
/// planted cut edge (twice), the same with loops and parallel edges added,
/// and a connected graph where an arbitrary edge end is moved.
pub fn run_edge_transform_suite(count: usize, seed: u64) -> AuditReport {
    let mut rows = Vec::with_capacity(count);
    for (k, s) in instance_seeds(count, seed).into_iter().enumerate() {
        let id = k as u64;
        let mut rng = SplitMix64::new(s);
        let row = match k {
            0 => cut_edge_row(id, s, "P4", &path(4), 1, 0, 2),
            1 => cut_edge_row(id, s, "K1,3", &star(3), 0, 1, 2),
            2 => {
                let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)]).unwrap();
                cut_edge_row(id, s, "triangles", &g, 0, 3, 1)
            }
            _ if k % 4 == 2 => {
                let n = rng.range_inclusive(3, MAX_RANDOM_N);
                let inst = random_multigraph_with_cut_edge(n, &mut rng).expect("n >= 3");
                let u_i = random_master_target(&inst.graph, inst.u1, inst.v1, &mut rng);
                cut_edge_row(id, s, &format!("multi(n={n})"), &inst.graph, inst.u1, inst.v1, u_i)
            }
            _ if k % 4 == 3 => free_edge_row(id, s, &mut rng),
            _ => {
                let n = rng.range_inclusive(3, MAX_RANDOM_N);
                let inst = random_connected_with_cut_edge(n, &mut rng).expect("n >= 3");
                let u_i = random_master_target(&inst.graph, inst.u1, inst.v1, &mut rng);
                cut_edge_row(id, s, &format!("cut(n={n})"), &inst.graph, inst.u1, inst.v1, u_i)
            }
        };
        rows.push(row);
    }
    let cfg = config(
        count,
        &[
            ("n_range", "3..=40"),
            ("variants", "cut,cut,multi,free"),
            ("degrees", "taken before the move"),
        ],
    );
    AuditReport::build(Suite::EdgeTransform.name(), seed, cfg, rows, Vec::new())
}

/// An edge `u1 v1` of a connected simple graph (not necessarily a bridge)
/// whose `u1` end moves to a vertex not yet adjacent to `v1`.
fn free_edge_row(id: u64, seed: u64, rng: &mut SplitMix64) -> AuditRow {
    loop {
        let n = rng.range_inclusive(3, MAX_RANDOM_N);
        let density = EdgeDensity::random(rng);
        let g = random_connected(n, density, rng);
        let &(a, b) = rng.pick(g.edges()).expect("connected graph on >= 3 vertices has edges");
        let (u1, v1) = if rng.below(2) == 0 { (a, b) } else { (b, a) };
        let targets: Vec<Vertex> = (0..n).filter(|&x| x != u1 && x != v1 && !g.contains_edge(x, v1)).collect();
        if let Some(&u_i) = rng.pick(&targets) {
            let op = EditOp::RetargetEdgeEnd { keep: v1, from: u1, to: u_i };
            return transform_row(id, seed, &format!("free({})", er_name(n, density)), &g, (u1, v1, u_i), op);
        }
    }
}

// ------------------------------------------------------- arc transforms

fn arc_row(id: u64, seed: u64, label: &str, d: &Digraph, arc: (Vertex, Vertex), target: Vertex, end: ArcEnd) -> (AuditRow, Option<String>) {
    let op = crate::transforms::arc_transformation_op(arc, target, end);
    let after = d.apply_edit(&op).expect("validated arc edit");
    let delta = exact_arc_delta_for_edit(d, &op).expect("validated arc edit");
    let (before_pair, after_pair) = (irr_digraph_naive(d), irr_digraph_naive(&after));
    // head moves change in-degrees only, tail moves out-degrees only
    let (mode, losing, before, after_v, engine, other_engine, other_before, other_after) = match end {
        ArcEnd::Head => (
            DegreeMode::In,
            arc.1,
            before_pair.irr_in,
            after_pair.irr_in,
            delta.d_in,
            delta.d_out,
            before_pair.irr_out,
            after_pair.irr_out,
        ),
        ArcEnd::Tail => (
            DegreeMode::Out,
            arc.0,
            before_pair.irr_out,
            after_pair.irr_out,
            delta.d_out,
            delta.d_in,
            before_pair.irr_in,
            after_pair.irr_in,
        ),
    };
    let mut row = AuditRow::new(id, seed, format!("{label} {op} [{mode}]"), before, after_v, engine);
    let counts = arc_partition(d, losing, target, mode).expect("distinct endpoints");
    row.predict(arc_transform_predict(before, &counts).expect("directed mode"));
    let other_mode_moved = other_engine != 0
        || other_before != other_after
        || d.degree_multiset(other(mode)).unwrap() != after.degree_multiset(other(mode)).unwrap();
    let violation = other_mode_moved.then(|| format!("instance {id} ({}): {} degrees changed", row.operation, other(mode)));
    (row, violation)
}

fn other(mode: DegreeMode) -> DegreeMode {
    match mode {
        DegreeMode::In => DegreeMode::Out,
        _ => DegreeMode::In,
    }
}

fn random_arc_source(rng: &mut SplitMix64) -> (String, Digraph) {
    loop {
        let n = rng.range_inclusive(2, MAX_RANDOM_N);
        let (label, d) = match rng.below(3) {
            0 => {
                let density = EdgeDensity::random(rng);
                (format!("digraph(n={n} p=0.{})", density.tenths()), random_digraph(n, density, rng))
            }
            1 => {
                let density = EdgeDensity::random(rng);
                let g = random_graph(n, density, rng);
                let labels = rng.permutation(n);
                (format!("oriented({})", er_name(n, density)), orient_by_labeling(&g, &labels).expect("permutation"))
            }
            _ => (format!("tournament(n={n})"), random_tournament(n, rng)),
        };
        if d.arc_count() > 0 && n >= 3 {
            return (label, d);
        }
    }
}

/// Arc-transformations in both modes. Rows 0..3 are desk instances: a
/// head move on the directed 4-cycle, a tail move on the transitive
/// tournament on 5 vertices, and a head move on the directed 4-path that
/// lands in the equal-degree case. Random rows draw a digraph, an
/// oriented graph or a tournament, then an arc, an end and a target.
pub fn run_arc_transform_suite(count: usize, seed: u64) -> AuditReport {
    let mut rows = Vec::with_capacity(count);
    let mut violations = Vec::new();
    for (k, s) in instance_seeds(count, seed).into_iter().enumerate() {
        let id = k as u64;
        let mut rng = SplitMix64::new(s);
        let (row, violation) = match k {
            0 => arc_row(id, s, "C4->", &directed_cycle(4).unwrap(), (0, 1), 2, ArcEnd::Head),
            1 => arc_row(id, s, "K5->", &transitive_tournament(5), (0, 1), 3, ArcEnd::Tail),
            2 => arc_row(id, s, "P4->", &directed_path(4), (1, 2), 0, ArcEnd::Head),
            _ => 'draw: loop {
                let (label, d) = random_arc_source(&mut rng);
                let n = d.vertex_count();
                for _ in 0..64 {
                    let arc = *rng.pick(d.arcs()).unwrap();
                    let end = if rng.below(2) == 0 { ArcEnd::Head } else { ArcEnd::Tail };
                    let target = rng.below(n);
                    let op = crate::transforms::arc_transformation_op(arc, target, end);
                    if d.check_edit(&op).is_ok() {
                        break 'draw arc_row(id, s, &label, &d, arc, target, end);
                    }
                }
            },
        };
        violations.extend(violation);
        rows.push(row);
    }
    let cfg = config(
        count,
        &[
            ("n_range", "3..=40"),
            ("sources", "digraph,oriented,tournament"),
            ("head_mode", "in"),
            ("tail_mode", "out"),
        ],
    );
    AuditReport::build(Suite::ArcTransform.name(), seed, cfg, rows, violations)
}

// ---------------------------------------------------------- closed forms

/// Builds `d` arc by arc from the edgeless digraph with the incremental
/// engine and returns the accumulated `(in, out)` deltas.
fn build_incrementally(d: &Digraph) -> (i64, i64) {
    let n = d.vertex_count();
    let mut ins = IncrementalIrr::new(vec![0; n]);
    let mut outs = IncrementalIrr::new(vec![0; n]);
    let (mut d_in, mut d_out) = (0, 0);
    for &(a, b) in d.arcs() {
        d_out += outs.step(a, DegreeStep::Increment).expect("vertex in range");
        d_in += ins.step(b, DegreeStep::Increment).expect("vertex in range");
    }
    (d_in, d_out)
}

fn construction_rows(rows: &mut Vec<AuditRow>, id: u64, label: &str, d: &Digraph, formula: FormulaId, expected: IrrPair) {
    let oracle = irr_digraph_naive(d);
    let (d_in, d_out) = build_incrementally(d);
    let mut r_in = AuditRow::new(id, 0, format!("{label} [in]"), 0, oracle.irr_in, d_in);
    r_in.predict(Prediction::new(formula, expected.irr_in as i64));
    let mut r_out = AuditRow::new(id, 0, format!("{label} [out]"), 0, oracle.irr_out, d_out);
    r_out.predict(Prediction::new(formula, expected.irr_out as i64));
    rows.push(r_in);
    rows.push(r_out);
}

fn reversal_rows(rows: &mut Vec<AuditRow>, id: u64, label: &str, d: &Digraph, arc: (Vertex, Vertex), formula: FormulaId, expected: IrrPair) {
    let op = EditOp::ReverseArc { tail: arc.0, head: arc.1 };
    let after = d.apply_edit(&op).expect("arc present");
    let delta = exact_arc_delta_for_edit(d, &op).expect("arc present");
    let (before, after) = (irr_digraph_naive(d), irr_digraph_naive(&after));
    let mut r_in = AuditRow::new(id, 0, format!("{label} {op} [in]"), before.irr_in, after.irr_in, delta.d_in);
    r_in.predict(Prediction::new(formula, expected.irr_in as i64));
    let mut r_out = AuditRow::new(id, 0, format!("{label} {op} [out]"), before.irr_out, after.irr_out, delta.d_out);
    r_out.predict(Prediction::new(formula, expected.irr_out as i64));
    rows.push(r_in);
    rows.push(r_out);
}

/// Closed forms for transitive tournaments (`n <= max_n`), left-to-right
/// complete bipartite orientations (`m, n <= max_n / 2`), directed paths
/// and cycles (`n <= max_n`) with every single-arc reversal. Each family
/// member contributes an in-row and an out-row under one instance id.
pub fn run_closed_form_suite(max_n: usize) -> AuditReport {
    let mut rows = Vec::new();
    let mut id = 0u64;
    for n in 1..=max_n {
        let t = transitive_tournament_irr(n);
        construction_rows(&mut rows, id, &format!("K{n}->"), &transitive_tournament(n), FormulaId::TransitiveTournament, IrrPair::new(t, t));
        id += 1;
    }
    let half = max_n / 2;
    for m in 1..=half {
        for n in 1..=half {
            let d = orient_left_right(m, n);
            construction_rows(&mut rows, id, &format!("K{m},{n}-lr"), &d, FormulaId::LeftRightBipartite, left_right_bipartite_irr(m, n));
            id += 1;
        }
    }
    for n in 2..=max_n {
        let d = directed_path(n);
        let plain = directed_path_irr(n, PathReversal::None).unwrap();
        construction_rows(&mut rows, id, &format!("P{n}->"), &d, FormulaId::DirectedPath, plain);
        id += 1;
        for i in 1..n {
            let expected = directed_path_irr(n, PathReversal::for_arc(n, i).unwrap()).unwrap();
            reversal_rows(&mut rows, id, &format!("P{n}->"), &d, (i - 1, i), FormulaId::DirectedPath, expected);
            id += 1;
        }
    }
    for n in 3..=max_n {
        let d = directed_cycle(n).unwrap();
        construction_rows(&mut rows, id, &format!("C{n}->"), &d, FormulaId::DirectedCycle, directed_cycle_irr(n, false).unwrap());
        id += 1;
        let expected = directed_cycle_irr(n, true).unwrap();
        for i in 0..n {
            reversal_rows(&mut rows, id, &format!("C{n}->"), &d, (i, (i + 1) % n), FormulaId::DirectedCycle, expected);
            id += 1;
        }
    }
    let mut cfg = BTreeMap::new();
    cfg.insert("max_n".to_string(), max_n.to_string());
    cfg.insert("bipartite_max".to_string(), half.to_string());
    AuditReport::build(Suite::ClosedForms.name(), 0, cfg, rows, Vec::new())
}

// ---------------------------------------------------- branch transforms

/// Every `(u, root, v)` for which moving the tree hanging from `u` at
/// `root` onto the pendant `v` is allowed.
pub(crate) fn branch_moves(g: &Graph) -> Vec<EditOp> {
    let n = g.vertex_count();
    let pendants: Vec<Vertex> = (0..n).filter(|&x| g.degree(x) == 1).collect();
    let adjacency = g.adjacency();
    let mut moves = Vec::new();
    for u in (0..n).filter(|&x| g.degree(x) >= 3) {
        let mut roots = adjacency[u].clone();
        roots.sort_unstable();
        roots.dedup();
        for root in roots {
            if root == u || g.multiplicity(u, root) != 1 {
                continue;
            }
            let Ok(side) = g.master_side(root, u) else { continue };
            let size = side.iter().filter(|&&x| x).count();
            let inner = g.edges().iter().filter(|&&(a, b)| side[a] && side[b]).count();
            if inner + 1 != size {
                continue;
            }
            for &v in pendants.iter().filter(|&&v| v != u && !side[v]) {
                moves.push(EditOp::MoveBranch { u, root, v });
            }
        }
    }
    moves
}

fn branch_row(id: u64, seed: u64, label: &str, g: &Graph, op: EditOp) -> AuditRow {
    let after = g.apply_edit(&op).expect("branch move preconditions hold");
    let mut row = AuditRow::new(
        id,
        seed,
        format!("{label} {op}"),
        oracle(g),
        oracle(&after),
        exact_delta_for_edit(g, &op).expect("validated edit"),
    );
    row.predict(Prediction::new(FormulaId::BranchDecrease, -1));
    row
}

fn random_hanging(rng: &mut SplitMix64) -> (String, Graph) {
    if rng.below(2) == 0 {
        let n = rng.range_inclusive(4, MAX_RANDOM_N);
        return (format!("tree(n={n})"), random_tree(n, rng));
    }
    let core_n = rng.range_inclusive(1, 15);
    let density = EdgeDensity::random(rng);
    let core = random_connected(core_n, density, rng);
    let n = rng.range_inclusive(core_n + 3, MAX_RANDOM_N);
    let mut g = Graph::from_edges(n, core.edges().iter().copied()).expect("core is simple");
    for x in core_n..n {
        let parent = rng.below(x);
        g.insert_edge(parent, x).expect("fresh pendant edge");
    }
    (format!("hanging(core={} n={n})", er_name(core_n, density)), g)
}

/// Branch moves. Rows 0 and 1 are a spider on four vertices and a double
/// star; random rows use random trees or a random connected core with
/// random trees hung from it, and pick one allowed move uniformly.
pub fn run_branch_transform_suite(count: usize, seed: u64) -> AuditReport {
    let mut rows = Vec::with_capacity(count);
    for (k, s) in instance_seeds(count, seed).into_iter().enumerate() {
        let id = k as u64;
        let mut rng = SplitMix64::new(s);
        let row = match k {
            0 => branch_row(id, s, "spider", &star(3), EditOp::MoveBranch { u: 0, root: 3, v: 2 }),
            1 => {
                let g = Graph::from_edges(7, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6)]).unwrap();
                branch_row(id, s, "double-star", &g, EditOp::MoveBranch { u: 0, root: 2, v: 5 })
            }
            _ => loop {
                let (label, g) = random_hanging(&mut rng);
                let moves = branch_moves(&g);
                if let Some(&op) = rng.pick(&moves) {
                    break branch_row(id, s, &label, &g, op);
                }
            },
        };
        rows.push(row);
    }
    let cfg = config(
        count,
        &[("n_range", "4..=40"), ("sources", "tree,hanging"), ("core_range", "1..=15")],
    );
    AuditReport::build(Suite::BranchTransform.name(), seed, cfg, rows, Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_joint_desk_rows() {
        let report = run_edge_joint_suite(8, 0xC0FFEE);
        assert!(report.passed(), "{:?}", report.hard_violations);
        let c3 = &report.rows[0];
        assert_eq!(c3.irr_after_oracle, 8);
        let p = c3.prediction(FormulaId::RegularJointEqual).unwrap();
        assert_eq!((p.predicted, p.agrees), (10, false));
        let k1 = &report.rows[1];
        assert_eq!(k1.irr_after_oracle, 0);
        let p = k1.prediction(FormulaId::RegularJointEqual).unwrap();
        assert_eq!((p.predicted, p.agrees), (2, false));
        let k4c3 = &report.rows[2];
        assert_eq!(k4c3.oracle_delta(), 4);
        assert_eq!(k4c3.prediction(FormulaId::JointInterim).unwrap().predicted, 2);
    }

    #[test]
    fn edge_transform_desk_rows() {
        let report = run_edge_transform_suite(3, 1);
        let expect = [
            (FormulaId::EdgeTransformAbove, 4, 6),
            (FormulaId::EdgeTransformBelow, 6, 4),
            (FormulaId::EdgeTransformEqual, 8, 8),
        ];
        for (row, (formula, before, after)) in report.rows.iter().zip(expect) {
            assert_eq!((row.irr_before, row.irr_after_oracle), (before, after));
            let p = row.prediction(formula).unwrap();
            assert!(p.agrees);
        }
    }

    #[test]
    fn arc_desk_rows() {
        let report = run_arc_transform_suite(3, 1);
        assert!(report.passed(), "{:?}", report.hard_violations);
        assert!(report.rows[2].prediction(FormulaId::InArcEqual).unwrap().agrees);
        assert!(report.rows[1].operation.ends_with("[out]"));
    }

    #[test]
    fn small_suites_are_clean() {
        for suite in Suite::ALL {
            let report = run_suite(suite, 24, 7);
            assert!(report.passed(), "{suite}: {:?}", report.hard_violations);
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn branch_moves_on_spider() {
        let moves = branch_moves(&star(3));
        assert_eq!(moves.len(), 6);
        assert!(branch_moves(&path(5)).is_empty());
    }
}
