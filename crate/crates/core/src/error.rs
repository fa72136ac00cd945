use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: Vertex, vertex_count: usize },

    #[error("edge {{{0}, {1}}} is not present")]
    EdgeAbsent(Vertex, Vertex),

    #[error("arc ({0}, {1}) is not present")]
    ArcAbsent(Vertex, Vertex),

    #[error("edge {{{0}, {1}}} already present and parallel edges are not allowed")]
    ParallelEdge(Vertex, Vertex),

    #[error("arc ({0}, {1}) already present")]
    DuplicateArc(Vertex, Vertex),

    #[error("loop at vertex {0} is not allowed")]
    LoopNotAllowed(Vertex),

    #[error("degree mode {mode} does not apply to a {kind} graph")]
    ModeMismatch { mode: &'static str, kind: &'static str },

    #[error("edit {op} cannot be applied to a {kind} graph")]
    KindMismatch { op: String, kind: &'static str },

    #[error("edge {{{0}, {1}}} is not a cut edge")]
    NotCutEdge(Vertex, Vertex),

    #[error("degree {0} does not occur in the degree multiset")]
    DegreeAbsent(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
