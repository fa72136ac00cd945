use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use irrt_core::audit::{run_suite, AuditRow};
use irrt_core::generators::{
    complete, complete_bipartite, cycle, directed_cycle, empty, orient_by_labeling, orient_left_right, path,
    random_connected, random_graph, random_tree, star, EdgeDensity,
};
use irrt_core::partitions::{arc_partition, joint_partition, transform_partition, TransformPartitionCounts};
use irrt_core::predictors::{
    arc_transform_predict, edge_transform_predict, joint_final_deltas, joint_interim_delta, regular_joint_irr,
};
use irrt_core::transforms::{arc_transformation_op, disjoint_union, edge_transformation_op};
use irrt_core::{
    exact_arc_delta_for_edit, exact_delta_for_edit, irr_digraph, irr_digraph_naive, irr_graph, irr_naive,
    parse_graph, write_graph, AnyGraph, ArcEnd, DegreeMode, Digraph, EditOp, FormulaId, Graph, Prediction,
    SplitMix64, Suite,
};

#[derive(Parser)]
#[command(name = "irrt", version, about = "Total irregularity of graphs and digraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print irr_t of an undirected graph, or irr_in and irr_out of a digraph.
    Compute {
        #[arg(long)]
        input: PathBuf,
    },
    /// Join two undirected graphs with one edge.
    Joint(JointArgs),
    /// Move one end of a cut edge, or one end of an arc.
    Transform(TransformArgs),
    /// Run an audit suite and write its report.
    Audit(AuditArgs),
    /// Write a graph from a named family.
    Generate(GenerateArgs),
}

#[derive(Args)]
struct JointArgs {
    #[arg(long)]
    left: PathBuf,
    #[arg(long)]
    right: PathBuf,
    /// Endpoint in the left graph.
    #[arg(long)]
    u: usize,
    /// Endpoint in the right graph, in its own numbering.
    #[arg(long)]
    v: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    report: bool,
}

#[derive(Args)]
struct TransformArgs {
    #[arg(long)]
    input: PathBuf,
    /// `A B`: the edge {A, B} whose A end moves, or the arc (A, B).
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    cut: Vec<usize>,
    #[arg(long)]
    target: usize,
    /// Arc end to move; digraphs only (default head).
    #[arg(long, value_enum)]
    end: Option<EndArg>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    report: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum EndArg {
    Head,
    Tail,
}

#[derive(Args)]
struct AuditArgs {
    #[arg(long, value_enum)]
    suite: SuiteArg,
    /// Instance count; for closed-forms, the largest n.
    #[arg(long)]
    instances: usize,
    /// Decimal or 0x-prefixed hexadecimal.
    #[arg(long, value_parser = parse_seed, default_value = "0")]
    seed: u64,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    EdgeJoint,
    EdgeTransform,
    ArcTransform,
    ClosedForms,
    #[value(alias = "lemma34")]
    BranchTransform,
    JointInvariance,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::EdgeJoint => Suite::EdgeJoint,
            SuiteArg::EdgeTransform => Suite::EdgeTransform,
            SuiteArg::ArcTransform => Suite::ArcTransform,
            SuiteArg::ClosedForms => Suite::ClosedForms,
            SuiteArg::BranchTransform => Suite::BranchTransform,
            SuiteArg::JointInvariance => Suite::JointInvariance,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Comma-separated integers; see the family list in the README.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    params: Vec<usize>,
    #[arg(long, value_enum, default_value = "none")]
    orient: Orient,
    #[arg(long, value_parser = parse_seed, default_value = "0")]
    seed: u64,
    /// Labeling for `--orient labeling`: comma-separated permutation,
    /// `labels[v]` being the label of vertex v. Default: identity.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    labels: Option<Vec<usize>>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Empty,
    Path,
    Cycle,
    Complete,
    Star,
    CompleteBipartite,
    Random,
    RandomTree,
    RandomConnected,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Orient {
    None,
    Labeling,
    LeftRight,
    Cyclic,
}

enum Failure {
    Input(String),
    Violation(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn parse_seed(s: &str) -> Result<u64, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("invalid seed {s:?}: {e}"))
}

fn read_graph(path: &Path) -> Result<AnyGraph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_undirected(path: &Path) -> Result<Graph, Failure> {
    match read_graph(path)? {
        AnyGraph::Undirected(g) => Ok(g),
        AnyGraph::Directed(_) => Err(Failure::Input(format!("{}: expected an undirected graph", path.display()))),
    }
}

fn write_out(path: &Path, contents: &str) -> Outcome {
    fs::write(path, contents).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit_graph(graph: AnyGraph, out: Option<&Path>, report: bool) -> Outcome {
    match out {
        Some(path) => write_out(path, &write_graph(&graph)),
        None if !report => {
            print!("{}", write_graph(&graph));
            Ok(())
        }
        None => Ok(()),
    }
}

fn print_row(row: &AuditRow, label: &str) {
    println!("{label}irr_before={}", row.irr_before);
    println!("{label}irr_after={}", row.irr_after_oracle);
    println!("{label}oracle_delta={}", row.oracle_delta());
    println!("{label}engine_delta={}", row.engine_delta);
    for p in &row.predictions {
        let kind = match p.formula.kind() {
            irrt_core::PredictionKind::Delta => "delta",
            irrt_core::PredictionKind::Absolute => "absolute",
            irrt_core::PredictionKind::Sign => "sign",
        };
        println!("formula={} kind={kind} predicted={} agrees={}", p.formula, p.predicted, p.agrees);
    }
}

fn check_row(row: &AuditRow) -> Outcome {
    if row.engine_matches_oracle() {
        Ok(())
    } else {
        Err(Failure::Violation(format!(
            "engine delta {} differs from oracle delta {}",
            row.engine_delta,
            row.oracle_delta()
        )))
    }
}

fn print_counts(c: &TransformPartitionCounts) {
    println!(
        "h={} s={} t={} m={} l={} m1={} l1={} relation={}",
        c.h,
        c.s,
        c.t,
        c.m,
        c.l,
        c.m1,
        c.l1,
        format!("{:?}", c.relation).to_lowercase()
    );
}

fn compute(input: &Path) -> Outcome {
    match read_graph(input)? {
        AnyGraph::Undirected(g) => println!("irr_t={}", irr_graph(&g)),
        AnyGraph::Directed(d) => {
            let p = irr_digraph(&d);
            println!("irr_in={} irr_out={}", p.irr_in, p.irr_out);
        }
    }
    Ok(())
}

fn joint(args: &JointArgs) -> Outcome {
    let g1 = read_undirected(&args.left)?;
    let g2 = read_undirected(&args.right)?;
    let union = disjoint_union(&g1, &g2);
    if args.u >= g1.vertex_count() || args.v >= g2.vertex_count() {
        return Err(Failure::Input(format!(
            "endpoint out of range: u={} (left has {} vertices), v={} (right has {} vertices)",
            args.u,
            g1.vertex_count(),
            args.v,
            g2.vertex_count()
        )));
    }
    let op = EditOp::AddEdge { u: args.u, v: args.v + g1.vertex_count() };
    let joined = union.apply_edit(&op)?;
    if args.report {
        let mut row = AuditRow::new(
            0,
            0,
            op.to_string(),
            irr_naive(&union.degree_multiset()),
            irr_naive(&joined.degree_multiset()),
            exact_delta_for_edit(&union, &op)?,
        );
        let (dm1, dm2) = (g1.degree_multiset(), g2.degree_multiset());
        let (du, dv) = (g1.degree(args.u), g2.degree(args.v));
        let p = joint_partition(&dm1, &dm2, du, dv)?;
        let (form_a, form_b) = joint_final_deltas(&p);
        row.predict(Prediction::new(FormulaId::JointInterim, joint_interim_delta(&p)));
        row.predict(Prediction::new(FormulaId::JointFinalA, form_a));
        row.predict(Prediction::new(FormulaId::JointFinalB, form_b));
        if dm1.is_regular() && dm2.is_regular() {
            let (r, s) = (g1.vertex_count(), g2.vertex_count());
            let regular = if du >= dv { regular_joint_irr(r, s, du, dv) } else { regular_joint_irr(s, r, dv, du) };
            row.predict(regular?);
        }
        println!("operation={op}");
        println!(
            "a={} b={} a_star={} b_star={} c={} d={} c_star={} d_star={} r={} s={} n={}",
            p.a, p.b, p.a_star, p.b_star, p.c, p.d, p.c_star, p.d_star, p.r, p.s, p.n
        );
        print_row(&row, "");
        check_row(&row)?;
    }
    emit_graph(AnyGraph::Undirected(joined), args.out.as_deref(), args.report)
}

fn transform(args: &TransformArgs) -> Outcome {
    let (a, b) = (args.cut[0], args.cut[1]);
    match read_graph(&args.input)? {
        AnyGraph::Undirected(g) => {
            if args.end.is_some() {
                return Err(Failure::Input("--end applies to digraphs only".to_string()));
            }
            transform_edge(&g, a, b, args)
        }
        AnyGraph::Directed(d) => transform_arc(&d, (a, b), args),
    }
}

fn transform_edge(g: &Graph, u1: usize, v1: usize, args: &TransformArgs) -> Outcome {
    let op = edge_transformation_op(g, u1, v1, args.target)?;
    let after = g.apply_edit(&op)?;
    if args.report {
        let before = irr_naive(&g.degree_multiset());
        let mut row = AuditRow::new(0, 0, op.to_string(), before, irr_naive(&after.degree_multiset()), exact_delta_for_edit(g, &op)?);
        let counts = transform_partition(g, u1, v1, args.target)?;
        row.predict(edge_transform_predict(before, &counts));
        println!("operation={op}");
        print_counts(&counts);
        print_row(&row, "");
        check_row(&row)?;
    }
    emit_graph(AnyGraph::Undirected(after), args.out.as_deref(), args.report)
}

fn transform_arc(d: &Digraph, arc: (usize, usize), args: &TransformArgs) -> Outcome {
    let end = match args.end.unwrap_or(EndArg::Head) {
        EndArg::Head => ArcEnd::Head,
        EndArg::Tail => ArcEnd::Tail,
    };
    let op = arc_transformation_op(arc, args.target, end);
    let after = d.apply_edit(&op)?;
    if args.report {
        let (mode, losing) = match end {
            ArcEnd::Head => (DegreeMode::In, arc.1),
            ArcEnd::Tail => (DegreeMode::Out, arc.0),
        };
        let delta = exact_arc_delta_for_edit(d, &op)?;
        let (before, later) = (irr_digraph_naive(d), irr_digraph_naive(&after));
        let pick = |p: irrt_core::IrrPair| if mode == DegreeMode::In { p.irr_in } else { p.irr_out };
        let engine = if mode == DegreeMode::In { delta.d_in } else { delta.d_out };
        let mut row = AuditRow::new(0, 0, op.to_string(), pick(before), pick(later), engine);
        let counts = arc_partition(d, losing, args.target, mode)?;
        row.predict(arc_transform_predict(pick(before), &counts)?);
        println!("operation={op}");
        println!("mode={mode}");
        print_counts(&counts.counts);
        print_row(&row, "");
        println!("irr_in_after={} irr_out_after={}", later.irr_in, later.irr_out);
        check_row(&row)?;
        let other_engine = if mode == DegreeMode::In { delta.d_out } else { delta.d_in };
        let other_moved = if mode == DegreeMode::In {
            later.irr_out != before.irr_out
        } else {
            later.irr_in != before.irr_in
        };
        if other_engine != 0 || other_moved {
            return Err(Failure::Violation("the other degree mode changed".to_string()));
        }
    }
    emit_graph(AnyGraph::Directed(after), args.out.as_deref(), args.report)
}

fn audit(args: &AuditArgs) -> Outcome {
    let suite = Suite::from(args.suite);
    if args.instances == 0 {
        return Err(Failure::Input("--instances must be at least 1".to_string()));
    }
    let report = run_suite(suite, args.instances, args.seed);
    let body = match args.format {
        FormatArg::Csv => report.to_csv(),
        FormatArg::Json => report.to_json(),
    };
    write_out(&args.out, &body)?;
    println!(
        "suite={} seed={} instances={} rows={} hard_violations={}",
        report.suite,
        report.seed,
        report.instance_count,
        report.row_count,
        report.hard_violations.len()
    );
    for t in &report.formulas {
        println!(
            "formula={} evaluated={} agreed={} agreement_pct={:.2}",
            t.formula, t.evaluated, t.agreed, t.agreement_pct
        );
    }
    if report.passed() {
        Ok(())
    } else {
        for v in &report.hard_violations {
            eprintln!("violation: {v}");
        }
        Err(Failure::Violation(format!("{} hard violations", report.hard_violations.len())))
    }
}

fn params<const N: usize>(family: Family, given: &[usize]) -> Result<[usize; N], Failure> {
    given.try_into().map_err(|_| {
        Failure::Input(format!(
            "family {} takes {N} parameter(s), got {}",
            family.to_possible_value().expect("no skipped variants").get_name(),
            given.len()
        ))
    })
}

fn density(tenths: usize) -> Result<EdgeDensity, Failure> {
    EdgeDensity::ALL
        .into_iter()
        .find(|d| d.tenths() == tenths)
        .ok_or_else(|| Failure::Input(format!("density must be 2, 5 or 8 (tenths), got {tenths}")))
}

fn generate(args: &GenerateArgs) -> Outcome {
    let mut rng = SplitMix64::new(args.seed);
    let p = &args.params;
    let f = args.family;
    let graph = match f {
        Family::Empty => empty(params::<1>(f, p)?[0]),
        Family::Path => path(params::<1>(f, p)?[0]),
        Family::Cycle => cycle(params::<1>(f, p)?[0])?,
        Family::Complete => complete(params::<1>(f, p)?[0]),
        Family::Star => star(params::<1>(f, p)?[0]),
        Family::CompleteBipartite => {
            let [m, n] = params::<2>(f, p)?;
            complete_bipartite(m, n)
        }
        Family::Random => {
            let [n, tenths] = params::<2>(f, p)?;
            random_graph(n, density(tenths)?, &mut rng)
        }
        Family::RandomTree => random_tree(params::<1>(f, p)?[0], &mut rng),
        Family::RandomConnected => {
            let [n, tenths] = params::<2>(f, p)?;
            random_connected(n, density(tenths)?, &mut rng)
        }
    };
    if args.labels.is_some() && args.orient != Orient::Labeling {
        return Err(Failure::Input("--labels requires --orient labeling".to_string()));
    }
    let out = match args.orient {
        Orient::None => AnyGraph::Undirected(graph),
        Orient::Labeling => {
            let labels = args.labels.clone().unwrap_or_else(|| (0..graph.vertex_count()).collect());
            AnyGraph::Directed(orient_by_labeling(&graph, &labels)?)
        }
        Orient::LeftRight => {
            if f != Family::CompleteBipartite {
                return Err(Failure::Input("--orient left-right needs --family complete-bipartite".to_string()));
            }
            AnyGraph::Directed(orient_left_right(p[0], p[1]))
        }
        Orient::Cyclic => {
            if f != Family::Cycle {
                return Err(Failure::Input("--orient cyclic needs --family cycle".to_string()));
            }
            AnyGraph::Directed(directed_cycle(p[0])?)
        }
    };
    write_out(&args.out, &write_graph(&out))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Compute { input } => compute(input),
        Command::Joint(args) => joint(args),
        Command::Transform(args) => transform(args),
        Command::Audit(args) => audit(args),
        Command::Generate(args) => generate(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Violation(msg)) => {
            eprintln!("invariant violation: {msg}");
            ExitCode::from(1)
        }
    }
}
