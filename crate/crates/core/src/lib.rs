//! Total irregularity of graphs and digraphs.
//!
//! `irr_t(G)` is the sum of `|d(u) - d(v)|` over all unordered vertex pairs;
//! for digraphs the same sum is taken over in-degrees and over out-degrees.
//! The crate evaluates it, maintains it exactly under edits through
//! per-step deltas, implements the joint and transformation operations,
//! evaluates the published formulas for them, and audits those formulas
//! against brute-force recomputation.

pub mod audit;
pub mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod irregularity;
pub mod partitions;
pub mod predictors;
pub mod rng;
pub mod transforms;

pub use audit::{AuditReport, AuditRow, PredictionCheck, Suite};
pub use error::{Error, Result};
pub use format::{parse_graph, write_graph};
pub use graph::{AnyGraph, DegreeMode, DegreeMultiset, DegreeStep, Digraph, EditOp, Graph, Simplicity, Vertex};
pub use irregularity::{
    delta_for_degree_change, exact_arc_delta_for_edit, exact_delta_for_edit, irr_digraph, irr_digraph_naive, irr_fast,
    irr_graph, irr_naive, ArcDelta, IncrementalIrr, IrrPair,
};
pub use predictors::{FormulaId, Prediction, PredictionKind};
pub use rng::SplitMix64;
pub use transforms::ArcEnd;
