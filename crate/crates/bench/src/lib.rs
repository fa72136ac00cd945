//! Seeded inputs shared by the benchmarks.

use irrt_core::generators::{random_graph, EdgeDensity};
use irrt_core::{DegreeMultiset, Graph, SplitMix64};

/// `n` degrees drawn uniformly from `0..=max_degree`.
pub fn random_multiset(n: usize, max_degree: usize, seed: u64) -> DegreeMultiset {
    let mut rng = SplitMix64::new(seed);
    DegreeMultiset::from_degrees((0..n).map(|_| rng.below(max_degree + 1)))
}

pub fn random_dense_graph(n: usize, seed: u64) -> Graph {
    random_graph(n, EdgeDensity::Medium, &mut SplitMix64::new(seed))
}
