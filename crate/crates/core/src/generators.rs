//! Graph families with canonical labelings, their orientations, and seeded
//! random instances.

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph, Simplicity, Vertex};
use crate::rng::SplitMix64;

pub fn empty(n: usize) -> Graph {
    Graph::new(n)
}

/// `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Precondition(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))).expect("complete graph is simple")
}

/// `K_{1,leaves}` with center 0.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star is simple")
}

/// Left block `0..m`, right block `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    Graph::from_edges(m + n, (0..m).flat_map(|i| (m..m + n).map(move |j| (i, j)))).expect("bipartite graph is simple")
}

/// Directs every edge from the endpoint with the lower label to the one with
/// the higher label. `labels[v]` is the label of vertex `v`; labels must be a
/// permutation of `0..n`.
pub fn orient_by_labeling(g: &Graph, labels: &[usize]) -> Result<Digraph> {
    let n = g.vertex_count();
    if labels.len() != n {
        return Err(Error::Precondition(format!("{} labels for {n} vertices", labels.len())));
    }
    let mut seen = vec![false; n];
    for &l in labels {
        if l >= n || seen[l] {
            return Err(Error::Precondition("labels are not a permutation".to_string()));
        }
        seen[l] = true;
    }
    let mut d = Digraph::new(n);
    for &(a, b) in g.edges() {
        if labels[a] < labels[b] {
            d.insert_arc(a, b)?;
        } else {
            d.insert_arc(b, a)?;
        }
    }
    Ok(d)
}

pub fn identity_labels(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// Every arc from the left block `0..m` to the right block `m..m+n`.
pub fn orient_left_right(m: usize, n: usize) -> Digraph {
    Digraph::from_arcs(m + n, (0..m).flat_map(|i| (m..m + n).map(move |j| (i, j)))).expect("simple")
}

pub fn directed_path(n: usize) -> Digraph {
    orient_by_labeling(&path(n), &identity_labels(n)).expect("identity labels")
}

/// `0 -> 1 -> ... -> (n-1) -> 0`.
pub fn directed_cycle(n: usize) -> Result<Digraph> {
    if n < 3 {
        return Err(Error::Precondition(format!("directed cycle needs n >= 3, got {n}")));
    }
    Digraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Complete graph oriented by the identity labeling.
pub fn transitive_tournament(n: usize) -> Digraph {
    orient_by_labeling(&complete(n), &identity_labels(n)).expect("identity labels")
}

/// Edge probability for the random generators, kept to a fixed table so that
/// seeds reproduce exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeDensity {
    Sparse,
    Medium,
    Dense,
}

impl EdgeDensity {
    pub const ALL: [EdgeDensity; 3] = [EdgeDensity::Sparse, EdgeDensity::Medium, EdgeDensity::Dense];

    pub fn from_index(i: usize) -> Result<Self> {
        Self::ALL
            .get(i)
            .copied()
            .ok_or_else(|| Error::Precondition(format!("density index {i} not in 0..3")))
    }

    pub fn index(self) -> usize {
        self as usize
    }

    /// Probability in tenths: 2, 5, 8.
    pub fn tenths(self) -> usize {
        match self {
            EdgeDensity::Sparse => 2,
            EdgeDensity::Medium => 5,
            EdgeDensity::Dense => 8,
        }
    }

    pub fn probability(self) -> f64 {
        self.tenths() as f64 / 10.0
    }

    pub fn random(rng: &mut SplitMix64) -> Self {
        Self::ALL[rng.below(3)]
    }
}

/// Erdős–Rényi `G(n, p)`: pairs `(i, j)`, `i < j`, visited in lexicographic
/// order, one Bernoulli draw each.
pub fn random_graph(n: usize, density: EdgeDensity, rng: &mut SplitMix64) -> Graph {
    let mut g = Graph::new(n);
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.bernoulli_tenths(density.tenths()) {
                g.insert_edge(i, j).expect("fresh pair");
            }
        }
    }
    g
}

/// Random recursive tree: vertex `i` attaches to a uniform earlier vertex,
/// then all labels are shuffled.
pub fn random_tree(n: usize, rng: &mut SplitMix64) -> Graph {
    let labels = rng.permutation(n);
    let mut g = Graph::new(n);
    for i in 1..n {
        let parent = rng.below(i);
        g.insert_edge(labels[parent], labels[i]).expect("tree edge");
    }
    g
}

/// A random spanning tree plus independent extra edges; connected for
/// every `n >= 1`.
pub fn random_connected(n: usize, density: EdgeDensity, rng: &mut SplitMix64) -> Graph {
    let mut g = random_tree(n, rng);
    for i in 0..n {
        for j in (i + 1)..n {
            if !g.contains_edge(i, j) && rng.bernoulli_tenths(density.tenths()) {
                g.insert_edge(i, j).expect("fresh pair");
            }
        }
    }
    g
}

/// A connected graph with a planted cut edge `u1 v1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutEdgeInstance {
    pub graph: Graph,
    pub u1: Vertex,
    pub v1: Vertex,
}

/// Two independent connected halves joined by one bridge. The master half
/// (holding `u1`) has at least two vertices whenever `n >= 3`; vertex labels
/// are shuffled afterwards.
pub fn random_connected_with_cut_edge(n: usize, rng: &mut SplitMix64) -> Result<CutEdgeInstance> {
    if n < 2 {
        return Err(Error::Precondition(format!("cut-edge instance needs n >= 2, got {n}")));
    }
    let r = if n == 2 { 1 } else { rng.range_inclusive(2, n - 1) };
    let master = random_connected(r, EdgeDensity::random(rng), rng);
    let slave = random_connected(n - r, EdgeDensity::random(rng), rng);
    let u1 = rng.below(r);
    let v1 = r + rng.below(n - r);
    let labels = rng.permutation(n);
    let edges = master
        .edges()
        .iter()
        .copied()
        .chain(slave.edges().iter().map(|&(a, b)| (a + r, b + r)))
        .chain(std::iter::once((u1, v1)))
        .map(|(a, b)| (labels[a], labels[b]));
    let graph = Graph::from_edges(n, edges)?;
    Ok(CutEdgeInstance { graph, u1: labels[u1], v1: labels[v1] })
}

/// As [`random_connected_with_cut_edge`], then loops and parallel edges are
/// sprinkled inside each half. The planted bridge keeps multiplicity one.
pub fn random_multigraph_with_cut_edge(n: usize, rng: &mut SplitMix64) -> Result<CutEdgeInstance> {
    let base = random_connected_with_cut_edge(n, rng)?;
    let master = base.graph.master_side(base.u1, base.v1)?;
    let mut graph = base.graph.relaxed();
    let extras = rng.below(n + 1);
    for _ in 0..extras {
        let a = rng.below(n);
        let same_side: Vec<Vertex> = (0..n).filter(|&x| master[x] == master[a]).collect();
        let b = *rng.pick(&same_side).expect("side contains a");
        graph.insert_edge(a, b)?;
    }
    debug_assert_eq!(graph.simplicity(), Simplicity::MULTI);
    Ok(CutEdgeInstance { graph, u1: base.u1, v1: base.v1 })
}

/// Each ordered pair `(i, j)`, `i != j`, becomes an arc independently.
pub fn random_digraph(n: usize, density: EdgeDensity, rng: &mut SplitMix64) -> Digraph {
    let mut d = Digraph::new(n);
    for i in 0..n {
        for j in 0..n {
            if i != j && rng.bernoulli_tenths(density.tenths()) {
                d.insert_arc(i, j).expect("fresh arc");
            }
        }
    }
    d
}

/// Each pair gets one arc of uniformly random direction.
pub fn random_tournament(n: usize, rng: &mut SplitMix64) -> Digraph {
    let mut d = Digraph::new(n);
    for i in 0..n {
        for j in (i + 1)..n {
            let (a, b) = if rng.below(2) == 0 { (i, j) } else { (j, i) };
            d.insert_arc(a, b).expect("fresh arc");
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::DegreeMode;

    #[test]
    fn deterministic_families() {
        assert_eq!(path(2), Graph::from_edges(2, [(0, 1)]).unwrap());
        let k4 = complete(4);
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(k4.degree_multiset().entries(), &[(3, 4)]);
        let k23 = complete_bipartite(2, 3);
        assert_eq!(k23.edge_count(), 6);
        assert_eq!(k23.degree_multiset().entries(), &[(2, 3), (3, 2)]);
        assert_eq!(star(4).degree_multiset().entries(), &[(1, 4), (4, 1)]);
        assert!(cycle(2).is_err());
        assert_eq!(cycle(5).unwrap().degree_multiset().entries(), &[(2, 5)]);
    }

    #[test]
    fn orientations() {
        let k4 = transitive_tournament(4);
        assert_eq!(k4.in_degrees(), &[0, 1, 2, 3]);
        assert_eq!(directed_path(4).arcs(), &[(0, 1), (1, 2), (2, 3)]);
        let lr = orient_left_right(2, 3);
        assert_eq!(lr.out_degrees(), &[3, 3, 0, 0, 0]);
        assert_eq!(orient_left_right(1, 1).arcs(), &[(0, 1)]);
        assert_eq!(orient_left_right(4, 5).arc_count(), 20);

        let reversed_labels = vec![3, 2, 1, 0];
        let d = orient_by_labeling(&path(4), &reversed_labels).unwrap();
        assert_eq!(d.arcs(), &[(1, 0), (2, 1), (3, 2)]);
        assert!(orient_by_labeling(&path(3), &[0, 0, 1]).is_err());
        assert!(orient_by_labeling(&path(3), &[0, 1]).is_err());
        assert_eq!(directed_cycle(4).unwrap().degree_multiset(DegreeMode::In).unwrap().entries(), &[(1, 4)]);
    }

    #[test]
    fn random_generators_are_reproducible() {
        let a = random_graph(5, EdgeDensity::Medium, &mut SplitMix64::new(7));
        let b = random_graph(5, EdgeDensity::Medium, &mut SplitMix64::new(7));
        assert_eq!(a, b);
        for seed in 0..50 {
            let mut rng = SplitMix64::new(seed);
            let n = 1 + rng.below(30);
            let t = random_tree(n, &mut rng);
            assert_eq!(t.edge_count(), n - 1);
            assert!(t.is_connected());

            let n = 2 + rng.below(30);
            let inst = random_connected_with_cut_edge(n, &mut rng).unwrap();
            assert!(inst.graph.is_connected());
            assert!(inst.graph.is_cut_edge(inst.u1, inst.v1).unwrap());
            let side = inst.graph.master_side(inst.u1, inst.v1).unwrap();
            if n >= 3 {
                assert!(side.iter().filter(|&&m| m).count() >= 2);
            }

            let multi = random_multigraph_with_cut_edge(n, &mut rng).unwrap();
            assert!(multi.graph.is_cut_edge(multi.u1, multi.v1).unwrap());
        }
    }

    #[test]
    fn random_orientations_are_simple() {
        let mut rng = SplitMix64::new(3);
        let t = random_tournament(8, &mut rng);
        assert_eq!(t.arc_count(), 28);
        let d = random_digraph(8, EdgeDensity::Dense, &mut rng);
        assert!(d.arcs().iter().all(|&(a, b)| a != b));
    }
}
