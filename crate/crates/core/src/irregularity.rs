//! Total irregularity and its exact incremental deltas.
//!
//! For a degree multiset the total irregularity is the sum of `|d(u) - d(v)|`
//! over unordered vertex pairs. [`irr_naive`] evaluates that double sum
//! literally and is the ground truth every other path is checked against.
//!
//! Magnitudes: with `n <= 2^20` vertices and maximum degree `D <= 2^20`, the
//! value is at most `D * n^2 / 2 < 2^59`, so `u64` values and `i64` deltas do
//! not overflow at supported scale. [`irr_fast`] accumulates in `u128`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DegreeMultiset, DegreeStep, Digraph, EditOp, Graph, Vertex};

/// `(irr_in, irr_out)` of a digraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct IrrPair {
    pub irr_in: u64,
    pub irr_out: u64,
}

impl IrrPair {
    pub fn new(irr_in: u64, irr_out: u64) -> Self {
        IrrPair { irr_in, irr_out }
    }

    pub fn apply(self, delta: ArcDelta) -> IrrPair {
        IrrPair {
            irr_in: offset(self.irr_in, delta.d_in),
            irr_out: offset(self.irr_out, delta.d_out),
        }
    }
}

/// Signed change of `(irr_in, irr_out)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct ArcDelta {
    pub d_in: i64,
    pub d_out: i64,
}

pub(crate) fn offset(value: u64, delta: i64) -> u64 {
    u64::try_from(value as i128 + delta as i128).expect("irregularity became negative")
}

/// Literal O(n^2) pair sum over the expanded degree sequence.
pub fn irr_naive(dm: &DegreeMultiset) -> u64 {
    let degrees: Vec<usize> = dm.expanded().collect();
    let mut total: u64 = 0;
    for i in 0..degrees.len() {
        for j in (i + 1)..degrees.len() {
            total += degrees[i].abs_diff(degrees[j]) as u64;
        }
    }
    total
}

/// Linear pass over distinct degrees.
///
/// Walking degree groups in ascending order, a group `(d, k)` contributes
/// `k * (d * below - sum_below)` where `below` / `sum_below` count and sum the
/// degrees of all vertices in earlier groups.
pub fn irr_fast(dm: &DegreeMultiset) -> u64 {
    let mut below: u128 = 0;
    let mut sum_below: u128 = 0;
    let mut total: u128 = 0;
    for &(d, k) in dm.entries() {
        let (d, k) = (d as u128, k as u128);
        total += k * (d * below - sum_below);
        below += k;
        sum_below += k * d;
    }
    u64::try_from(total).expect("irregularity exceeds u64")
}

pub fn irr_graph(g: &Graph) -> u64 {
    irr_fast(&g.degree_multiset())
}

pub fn irr_digraph(d: &Digraph) -> IrrPair {
    IrrPair {
        irr_in: irr_fast(&DegreeMultiset::from_degrees(d.in_degrees().iter().copied())),
        irr_out: irr_fast(&DegreeMultiset::from_degrees(d.out_degrees().iter().copied())),
    }
}

/// Same as [`irr_digraph`] but through the quadratic oracle.
pub fn irr_digraph_naive(d: &Digraph) -> IrrPair {
    IrrPair {
        irr_in: irr_naive(&DegreeMultiset::from_degrees(d.in_degrees().iter().copied())),
        irr_out: irr_naive(&DegreeMultiset::from_degrees(d.out_degrees().iter().copied())),
    }
}

/// `sum_{x in dm1} sum_{y in dm2} |x - y|`, the extra term picked up by a
/// disjoint union beyond the two parts' own irregularities.
pub fn union_cross_term(dm1: &DegreeMultiset, dm2: &DegreeMultiset) -> u64 {
    let left = dm1.entries();
    let total_count: u128 = dm1.vertex_count() as u128;
    let total_sum: u128 = left.iter().map(|&(d, k)| d as u128 * k as u128).sum();
    let mut i = 0;
    let mut count_le: u128 = 0;
    let mut sum_le: u128 = 0;
    let mut cross: u128 = 0;
    for &(y, k) in dm2.entries() {
        while i < left.len() && left[i].0 <= y {
            count_le += left[i].1 as u128;
            sum_le += left[i].0 as u128 * left[i].1 as u128;
            i += 1;
        }
        let y = y as u128;
        let lower = y * count_le - sum_le;
        let upper = (total_sum - sum_le) - y * (total_count - count_le);
        cross += k as u128 * (lower + upper);
    }
    u64::try_from(cross).expect("cross term exceeds u64")
}

/// Exact change in irregularity when one vertex of degree `old_degree` takes
/// a unit `step` and every other degree stays put.
///
/// Moving up, the vertex drifts away from the other vertices at or below
/// `old_degree` and closer to those strictly above it; moving down is the
/// mirror image.
pub fn delta_for_degree_change(dm: &DegreeMultiset, old_degree: usize, step: DegreeStep) -> Result<i64> {
    if !dm.contains(old_degree) {
        return Err(Error::DegreeAbsent(old_degree));
    }
    let delta = match step {
        DegreeStep::Increment => {
            let at_or_below = dm.count_le(old_degree) - 1;
            let above = dm.count_gt(old_degree);
            at_or_below as i64 - above as i64
        }
        DegreeStep::Decrement => {
            if old_degree == 0 {
                return Err(Error::Precondition("cannot decrement degree 0".to_string()));
            }
            let at_or_above = dm.count_ge(old_degree) - 1;
            let below = dm.count_lt(old_degree);
            at_or_above as i64 - below as i64
        }
    };
    Ok(delta)
}

/// Applies unit changes one at a time, each measured against the multiset
/// already updated by the previous ones.
fn delta_for_steps(mut dm: DegreeMultiset, degrees: &[usize], steps: &[(Vertex, DegreeStep)]) -> Result<i64> {
    let mut current: Vec<(Vertex, usize)> = Vec::with_capacity(steps.len());
    let mut total = 0i64;
    for &(v, step) in steps {
        let slot = match current.iter().position(|&(w, _)| w == v) {
            Some(i) => i,
            None => {
                current.push((v, degrees[v]));
                current.len() - 1
            }
        };
        let d = current[slot].1;
        total += delta_for_degree_change(&dm, d, step)?;
        dm = dm.with_step(d, step)?;
        current[slot].1 = match step {
            DegreeStep::Increment => d + 1,
            DegreeStep::Decrement => d - 1,
        };
    }
    Ok(total)
}

/// `irr(g.apply_edit(op)) - irr(g)` without rebuilding the edited graph.
pub fn exact_delta_for_edit(g: &Graph, op: &EditOp) -> Result<i64> {
    let steps = g.check_edit(op)?;
    delta_for_steps(g.degree_multiset(), g.degrees(), &steps)
}

/// Digraph counterpart of [`exact_delta_for_edit`].
pub fn exact_arc_delta_for_edit(d: &Digraph, op: &EditOp) -> Result<ArcDelta> {
    let changes = d.check_edit(op)?;
    let d_in = if changes.in_changes.is_empty() {
        0
    } else {
        let dm = DegreeMultiset::from_degrees(d.in_degrees().iter().copied());
        delta_for_steps(dm, d.in_degrees(), &changes.in_changes)?
    };
    let d_out = if changes.out_changes.is_empty() {
        0
    } else {
        let dm = DegreeMultiset::from_degrees(d.out_degrees().iter().copied());
        delta_for_steps(dm, d.out_degrees(), &changes.out_changes)?
    };
    Ok(ArcDelta { d_in, d_out })
}

/// Fenwick tree of vertex counts indexed by degree value.
#[derive(Debug, Clone)]
struct DegreeCounts {
    tree: Vec<i64>,
}

impl DegreeCounts {
    fn with_capacity(cap: usize) -> Self {
        DegreeCounts { tree: vec![0; cap.max(8) + 1] }
    }

    fn capacity(&self) -> usize {
        self.tree.len() - 1
    }

    fn add(&mut self, degree: usize, by: i64) {
        let mut i = degree + 1;
        while i < self.tree.len() {
            self.tree[i] += by;
            i += i & i.wrapping_neg();
        }
    }

    /// Vertices with degree `<= degree`.
    fn count_le(&self, degree: usize) -> i64 {
        let mut i = (degree + 1).min(self.capacity());
        let mut sum = 0;
        while i > 0 {
            sum += self.tree[i];
            i -= i & i.wrapping_neg();
        }
        sum
    }
}

/// Maintains the total irregularity of a changing degree sequence in
/// `O(log D)` per unit degree change.
#[derive(Debug, Clone)]
pub struct IncrementalIrr {
    degrees: Vec<usize>,
    counts: DegreeCounts,
    irr: u64,
}

impl IncrementalIrr {
    pub fn new(degrees: Vec<usize>) -> Self {
        let max = degrees.iter().copied().max().unwrap_or(0);
        let mut counts = DegreeCounts::with_capacity(2 * (max + 1));
        for &d in &degrees {
            counts.add(d, 1);
        }
        let irr = irr_fast(&DegreeMultiset::from_degrees(degrees.iter().copied()));
        IncrementalIrr { degrees, counts, irr }
    }

    pub fn irr(&self) -> u64 {
        self.irr
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    fn grow_to(&mut self, degree: usize) {
        if degree < self.counts.capacity() {
            return;
        }
        let mut counts = DegreeCounts::with_capacity(2 * (degree + 1));
        for &d in &self.degrees {
            counts.add(d, 1);
        }
        self.counts = counts;
    }

    /// Applies one unit step at `v` and returns the irregularity delta.
    pub fn step(&mut self, v: Vertex, step: DegreeStep) -> Result<i64> {
        let n = self.degrees.len() as i64;
        let d = *self.degrees.get(v).ok_or(Error::VertexOutOfRange { vertex: v, vertex_count: self.degrees.len() })?;
        let delta = match step {
            DegreeStep::Increment => {
                self.grow_to(d + 1);
                let at_or_below = self.counts.count_le(d) - 1;
                let above = n - self.counts.count_le(d);
                self.counts.add(d, -1);
                self.counts.add(d + 1, 1);
                self.degrees[v] = d + 1;
                at_or_below - above
            }
            DegreeStep::Decrement => {
                if d == 0 {
                    return Err(Error::Precondition("cannot decrement degree 0".to_string()));
                }
                let below = self.counts.count_le(d - 1);
                let at_or_above = n - below - 1;
                self.counts.add(d, -1);
                self.counts.add(d - 1, 1);
                self.degrees[v] = d - 1;
                at_or_above - below
            }
        };
        self.irr = offset(self.irr, delta);
        Ok(delta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Simplicity;

    fn dm(entries: &[(usize, usize)]) -> DegreeMultiset {
        DegreeMultiset::from_entries(entries.to_vec()).unwrap()
    }

    #[test]
    fn naive_examples() {
        assert_eq!(irr_naive(&dm(&[(2, 5)])), 0);
        assert_eq!(irr_naive(&dm(&[(1, 4), (4, 1)])), 12);
        assert_eq!(irr_naive(&dm(&[(1, 2), (2, 2)])), 4);
        assert_eq!(irr_naive(&DegreeMultiset::default()), 0);
        assert_eq!(irr_naive(&dm(&[(7, 1)])), 0);
    }

    #[test]
    fn fast_examples() {
        assert_eq!(irr_fast(&dm(&[(2, 5)])), 0);
        assert_eq!(irr_fast(&dm(&[(1, 4), (4, 1)])), 12);
        assert_eq!(irr_fast(&dm(&[(0, 1), (1, 1), (2, 1), (3, 1)])), 10);
    }

    #[test]
    fn digraph_examples() {
        let c6 = Digraph::from_arcs(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert_eq!(irr_digraph(&c6), IrrPair::new(0, 0));
        let p5 = Digraph::from_arcs(5, (0..4).map(|i| (i, i + 1))).unwrap();
        assert_eq!(irr_digraph(&p5), IrrPair::new(4, 4));
        let k23 = Digraph::from_arcs(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(irr_digraph(&k23), IrrPair::new(12, 18));
    }

    #[test]
    fn cross_term_examples() {
        let c3 = dm(&[(2, 3)]);
        assert_eq!(union_cross_term(&c3, &dm(&[(2, 4)])), 0);
        assert_eq!(union_cross_term(&dm(&[(1, 2)]), &c3), 6);
        assert_eq!(union_cross_term(&dm(&[(3, 4)]), &c3), 12);
        assert_eq!(union_cross_term(&DegreeMultiset::default(), &c3), 0);
    }

    #[test]
    fn degree_change_examples() {
        assert_eq!(delta_for_degree_change(&dm(&[(2, 3)]), 2, DegreeStep::Increment).unwrap(), 2);
        assert_eq!(delta_for_degree_change(&dm(&[(1, 3), (3, 1)]), 1, DegreeStep::Increment).unwrap(), 1);
        assert_eq!(delta_for_degree_change(&dm(&[(5, 1)]), 5, DegreeStep::Increment).unwrap(), 0);
        assert!(matches!(
            delta_for_degree_change(&dm(&[(5, 1)]), 4, DegreeStep::Increment),
            Err(Error::DegreeAbsent(4))
        ));
        assert!(delta_for_degree_change(&dm(&[(0, 2)]), 0, DegreeStep::Decrement).is_err());
    }

    #[test]
    fn edit_delta_examples() {
        let k13 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(exact_delta_for_edit(&k13, &EditOp::AddEdge { u: 1, v: 2 }).unwrap(), 0);

        let two_triangles = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(exact_delta_for_edit(&two_triangles, &EditOp::AddEdge { u: 0, v: 3 }).unwrap(), 8);

        for n in 3..10 {
            let c = Digraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap();
            let delta = exact_arc_delta_for_edit(&c, &EditOp::ReverseArc { tail: 0, head: 1 }).unwrap();
            let expected = 2 * (n as i64 - 1);
            assert_eq!(delta, ArcDelta { d_in: expected, d_out: expected });
        }
    }

    #[test]
    fn loop_edit_delta() {
        let g = Graph::from_edges_with(3, Simplicity::MULTI, [(0, 1), (1, 2)]).unwrap();
        let op = EditOp::AddEdge { u: 2, v: 2 };
        let after = g.apply_edit(&op).unwrap();
        assert_eq!(
            exact_delta_for_edit(&g, &op).unwrap(),
            irr_graph(&after) as i64 - irr_graph(&g) as i64
        );
    }

    #[test]
    fn incremental_tracker_follows_steps() {
        let mut t = IncrementalIrr::new(vec![0, 0, 0, 0]);
        // build K_{1,3} centered at 0
        for leaf in 1..4 {
            t.step(0, DegreeStep::Increment).unwrap();
            t.step(leaf, DegreeStep::Increment).unwrap();
        }
        assert_eq!(t.irr(), 6);
        assert_eq!(t.degrees(), &[3, 1, 1, 1]);
        // push the center far past the initial capacity
        for _ in 0..40 {
            t.step(0, DegreeStep::Increment).unwrap();
        }
        assert_eq!(t.irr(), irr_naive(&DegreeMultiset::from_degrees(t.degrees().iter().copied())));
        assert!(t.step(9, DegreeStep::Increment).is_err());
        let mut z = IncrementalIrr::new(vec![0]);
        assert!(z.step(0, DegreeStep::Decrement).is_err());
    }
}
