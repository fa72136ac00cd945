//! Named graph operations built on [`EditOp`].

use crate::error::{Error, Result};
use crate::graph::{Digraph, EditOp, Graph, Vertex};

/// Disjoint union; `g2`'s vertices are shifted by `g1.vertex_count()`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let offset = g1.vertex_count();
    let flags = g1.simplicity().union(g2.simplicity());
    let edges = g1
        .edges()
        .iter()
        .copied()
        .chain(g2.edges().iter().map(|&(a, b)| (a + offset, b + offset)));
    Graph::from_edges_with(g1.vertex_count() + g2.vertex_count(), flags, edges)
        .expect("union of valid graphs is valid")
}

/// `g1 ∪ g2 + uv`, with `v` relabeled to `v + |V(g1)|`.
pub fn edge_joint(g1: &Graph, g2: &Graph, u: Vertex, v: Vertex) -> Result<Graph> {
    if u >= g1.vertex_count() {
        return Err(Error::VertexOutOfRange { vertex: u, vertex_count: g1.vertex_count() });
    }
    if v >= g2.vertex_count() {
        return Err(Error::VertexOutOfRange { vertex: v, vertex_count: g2.vertex_count() });
    }
    let union = disjoint_union(g1, g2);
    union.apply_edit(&EditOp::AddEdge { u, v: v + g1.vertex_count() })
}

/// The edit that moves the cut edge `u1 v1` to `u_i v1`, after checking
/// that `u1 v1` is a cut edge and `u_i` sits on `u1`'s side.
pub fn edge_transformation_op(g: &Graph, u1: Vertex, v1: Vertex, u_i: Vertex) -> Result<EditOp> {
    let master = g.master_side(u1, v1)?;
    if u_i >= g.vertex_count() {
        return Err(Error::VertexOutOfRange { vertex: u_i, vertex_count: g.vertex_count() });
    }
    if u_i == u1 {
        return Err(Error::Precondition("target coincides with u1".to_string()));
    }
    if !master[u_i] {
        return Err(Error::Precondition(format!("target {u_i} lies in the slave component")));
    }
    Ok(EditOp::RetargetEdgeEnd { keep: v1, from: u1, to: u_i })
}

pub fn edge_transformation(g: &Graph, u1: Vertex, v1: Vertex, u_i: Vertex) -> Result<Graph> {
    g.apply_edit(&edge_transformation_op(g, u1, v1, u_i)?)
}

/// Moves the hanging tree rooted at `branch_root` from `u` to the pendant
/// vertex `v`.
pub fn branch_transformation(g: &Graph, u: Vertex, v: Vertex, branch_root: Vertex) -> Result<Graph> {
    g.apply_edit(&EditOp::MoveBranch { u, root: branch_root, v })
}

pub fn reverse_arc(d: &Digraph, arc: (Vertex, Vertex)) -> Result<Digraph> {
    d.apply_edit(&EditOp::ReverseArc { tail: arc.0, head: arc.1 })
}

pub fn reverse_all_arcs(d: &Digraph) -> Digraph {
    d.reversed()
}

/// Which end of an arc an arc-transformation moves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArcEnd {
    Tail,
    Head,
}

impl ArcEnd {
    pub fn name(self) -> &'static str {
        match self {
            ArcEnd::Tail => "tail",
            ArcEnd::Head => "head",
        }
    }
}

pub fn arc_transformation_op(arc: (Vertex, Vertex), target: Vertex, end: ArcEnd) -> EditOp {
    let (tail, head) = arc;
    match end {
        ArcEnd::Tail => EditOp::RetargetArcTail { tail, head, new_tail: target },
        ArcEnd::Head => EditOp::RetargetArcHead { tail, head, new_head: target },
    }
}

/// Tail mode: `(u1, v1)` becomes `(target, v1)`; head mode: `(u1, target)`.
pub fn arc_transformation(d: &Digraph, arc: (Vertex, Vertex), target: Vertex, end: ArcEnd) -> Result<Digraph> {
    d.apply_edit(&arc_transformation_op(arc, target, end))
}
