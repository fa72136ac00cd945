//! Vertex-class cardinalities that parameterize the published incremental
//! formulas. Only counts are exposed; the classes themselves stay internal.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DegreeMode, DegreeMultiset, Digraph, Graph, Vertex};

/// Class sizes around an edge-joint at `u1` (first component, `r` vertices)
/// and `v1` (second component, `s` vertices).
///
/// * `a` / `b`: first-component vertices other than `u1` with degree `<=` /
///   `>` than `d(u1)`.
/// * `a_star` / `b_star`: second-component vertices `<=` / `>` `d(u1)`.
/// * `c` / `d`: second-component vertices other than `v1`, `<=` / `>` `d(v1)`.
/// * `c_star` / `d_star`: first-component vertices `<=` / `>` `d(v1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct JointPartitionCounts {
    pub a: usize,
    pub b: usize,
    pub a_star: usize,
    pub b_star: usize,
    pub c: usize,
    pub d: usize,
    pub c_star: usize,
    pub d_star: usize,
    pub r: usize,
    pub s: usize,
    pub n: usize,
}

impl JointPartitionCounts {
    /// `a + b = r - 1`, `c + d = s - 1`, `a* + b* = s`, `c* + d* = r`, `n = r + s`.
    pub fn is_consistent(&self) -> bool {
        self.a + self.b + 1 == self.r
            && self.c + self.d + 1 == self.s
            && self.a_star + self.b_star == self.s
            && self.c_star + self.d_star == self.r
            && self.n == self.r + self.s
    }
}

pub fn joint_partition(
    g1_dm: &DegreeMultiset,
    g2_dm: &DegreeMultiset,
    deg_u1: usize,
    deg_v1: usize,
) -> Result<JointPartitionCounts> {
    if !g1_dm.contains(deg_u1) {
        return Err(Error::DegreeAbsent(deg_u1));
    }
    if !g2_dm.contains(deg_v1) {
        return Err(Error::DegreeAbsent(deg_v1));
    }
    let r = g1_dm.vertex_count();
    let s = g2_dm.vertex_count();
    Ok(JointPartitionCounts {
        a: g1_dm.count_le(deg_u1) - 1,
        b: g1_dm.count_gt(deg_u1),
        a_star: g2_dm.count_le(deg_u1),
        b_star: g2_dm.count_gt(deg_u1),
        c: g2_dm.count_le(deg_v1) - 1,
        d: g2_dm.count_gt(deg_v1),
        c_star: g1_dm.count_le(deg_v1),
        d_star: g1_dm.count_gt(deg_v1),
        r,
        s,
        n: r + s,
    })
}

/// How the receiving vertex's degree compares to the losing vertex's
/// degree minus one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Equal,
    Above,
    Below,
}

/// Class sizes for moving one edge end from a losing vertex (degree `D`)
/// to a receiving vertex (degree `R`), with threshold `D - 1`:
///
/// * `h`: vertices of degree `D - 1`, plus the losing vertex itself;
/// * `s`: other vertices of degree `> D - 1`; `t`: vertices `< D - 1`;
/// * `m` / `l`: members of the `s` class with degree `<=` / `>` `R`;
/// * `m1` / `l1`: members of the `t` class with degree `<=` / `>` `R`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TransformPartitionCounts {
    pub h: usize,
    pub s: usize,
    pub t: usize,
    pub m: usize,
    pub l: usize,
    pub m1: usize,
    pub l1: usize,
    pub relation: Relation,
}

impl TransformPartitionCounts {
    pub fn is_consistent(&self, n: usize) -> bool {
        self.h + self.s + self.t == n && self.m + self.l == self.s && self.m1 + self.l1 == self.t
    }
}

/// Counts from the degree multiset alone. `dm` must contain both the losing
/// and the receiving vertex; if they share a degree it must occur twice.
pub fn transform_counts(dm: &DegreeMultiset, losing: usize, receiving: usize) -> Result<TransformPartitionCounts> {
    let needed = if losing == receiving { 2 } else { 1 };
    if dm.multiplicity(losing) < needed {
        return Err(Error::DegreeAbsent(losing));
    }
    if !dm.contains(receiving) {
        return Err(Error::DegreeAbsent(receiving));
    }
    let n = dm.vertex_count();
    // class boundaries relative to `losing - 1`, which may be -1
    let (h_plain, t) = match losing.checked_sub(1) {
        Some(threshold) => (dm.multiplicity(threshold), dm.count_lt(threshold)),
        None => (0, 0),
    };
    let h = h_plain + 1;
    let s = n - h - t;
    // s-class degrees lie in [losing, inf) minus the losing vertex
    let m = if receiving >= losing {
        dm.count_le(receiving) - dm.count_lt(losing) - 1
    } else {
        0
    };
    // t-class degrees lie in [0, losing - 1)
    let m1 = match losing.checked_sub(1) {
        Some(threshold) if receiving < threshold => dm.count_le(receiving),
        _ => t,
    };
    let relation = match (receiving + 1).cmp(&losing) {
        std::cmp::Ordering::Equal => Relation::Equal,
        std::cmp::Ordering::Greater => Relation::Above,
        std::cmp::Ordering::Less => Relation::Below,
    };
    Ok(TransformPartitionCounts { h, s, t, m, l: s - m, m1, l1: t - m1, relation })
}

/// Counts for the edge-transformation that moves the cut edge `u1 v1` to
/// `u_i v1`, with degrees taken in `g` (cut edge present).
pub fn transform_partition(g: &Graph, u1: Vertex, v1: Vertex, u_i: Vertex) -> Result<TransformPartitionCounts> {
    let master = g.master_side(u1, v1)?;
    if u_i >= g.vertex_count() {
        return Err(Error::VertexOutOfRange { vertex: u_i, vertex_count: g.vertex_count() });
    }
    if u_i == u1 {
        return Err(Error::Precondition("target coincides with u1".to_string()));
    }
    if !master[u_i] {
        return Err(Error::Precondition(format!("target {u_i} is not in the master component")));
    }
    transform_counts(&g.degree_multiset(), g.degree(u1), g.degree(u_i))
}

/// [`TransformPartitionCounts`] over in- or out-degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ArcPartitionCounts {
    #[serde(serialize_with = "serialize_mode")]
    pub mode: DegreeMode,
    pub counts: TransformPartitionCounts,
}

fn serialize_mode<S: serde::Serializer>(mode: &DegreeMode, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(mode.name())
}

/// `v1` is the vertex that loses one degree in `mode`, `v_i` the one that
/// gains it.
pub fn arc_partition(d: &Digraph, v1: Vertex, v_i: Vertex, mode: DegreeMode) -> Result<ArcPartitionCounts> {
    let losing = d.degree_of(v1, mode)?;
    let receiving = d.degree_of(v_i, mode)?;
    if v1 == v_i {
        return Err(Error::Precondition("target coincides with v1".to_string()));
    }
    let counts = transform_counts(&d.degree_multiset(mode)?, losing, receiving)?;
    Ok(ArcPartitionCounts { mode, counts })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dm(degrees: &[usize]) -> DegreeMultiset {
        DegreeMultiset::from_degrees(degrees.iter().copied())
    }

    #[test]
    fn joint_examples() {
        let c3 = dm(&[2, 2, 2]);
        let p = joint_partition(&c3, &c3, 2, 2).unwrap();
        assert_eq!((p.a, p.b, p.a_star, p.b_star), (2, 0, 3, 0));
        assert_eq!((p.c, p.d, p.c_star, p.d_star), (2, 0, 3, 0));
        assert!(p.is_consistent());

        let k4 = dm(&[3, 3, 3, 3]);
        let p = joint_partition(&k4, &c3, 3, 2).unwrap();
        assert_eq!((p.a, p.b, p.a_star, p.b_star), (3, 0, 3, 0));
        assert_eq!((p.c, p.d, p.c_star, p.d_star), (2, 0, 0, 4));
        assert_eq!((p.r, p.s, p.n), (4, 3, 7));
        assert!(p.is_consistent());

        let k1 = dm(&[0]);
        let p = joint_partition(&k1, &k1, 0, 0).unwrap();
        assert_eq!((p.a, p.b, p.a_star, p.b_star), (0, 0, 1, 0));
        assert_eq!((p.c, p.d, p.c_star, p.d_star), (0, 0, 1, 0));

        assert!(matches!(joint_partition(&k4, &c3, 2, 2), Err(Error::DegreeAbsent(2))));
    }

    #[test]
    fn transform_examples() {
        // v1=0, u1=1, u2=2, u3=3
        let path = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let p = transform_partition(&path, 1, 0, 2).unwrap();
        assert_eq!((p.h, p.s, p.t, p.m, p.l), (3, 1, 0, 1, 0));
        assert_eq!(p.relation, Relation::Above);

        // u1=0 center, v1=1, leaves 2 and 3
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let p = transform_partition(&star, 0, 1, 2).unwrap();
        assert_eq!((p.h, p.s, p.t, p.m1, p.l1), (1, 0, 3, 3, 0));
        assert_eq!(p.relation, Relation::Below);

        let joined = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)]).unwrap();
        let p = transform_partition(&joined, 0, 3, 1).unwrap();
        assert_eq!(p.relation, Relation::Equal);
        assert!(p.is_consistent(6));
    }

    #[test]
    fn transform_errors() {
        let joined = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)]).unwrap();
        assert!(matches!(transform_partition(&joined, 0, 1, 2), Err(Error::NotCutEdge(0, 1))));
        assert!(matches!(transform_partition(&joined, 0, 3, 4), Err(Error::Precondition(_))));
        assert!(matches!(transform_partition(&joined, 0, 3, 0), Err(Error::Precondition(_))));
    }

    #[test]
    fn arc_examples() {
        let p4 = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let p = arc_partition(&p4, 1, 3, DegreeMode::In).unwrap();
        assert_eq!(p.counts.h, 2);

        let c4 = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let p = arc_partition(&c4, 0, 2, DegreeMode::In).unwrap();
        assert_eq!((p.counts.h, p.counts.s, p.counts.t), (1, 3, 0));

        // regular tournament on 5 vertices: i -> i+1, i+2 (mod 5)
        let t5 = Digraph::from_arcs(5, (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, (i + 2) % 5)])).unwrap();
        for v in 1..5 {
            assert_eq!(arc_partition(&t5, 0, v, DegreeMode::Out).unwrap().counts.t, 0);
        }
        assert!(arc_partition(&t5, 0, 0, DegreeMode::Out).is_err());
        assert!(arc_partition(&t5, 0, 1, DegreeMode::Undirected).is_err());
    }

    #[test]
    fn zero_degree_losing_vertex() {
        let p = transform_counts(&dm(&[0, 0, 1, 3]), 0, 1).unwrap();
        assert_eq!((p.h, p.s, p.t), (1, 3, 0));
        assert_eq!((p.m, p.l), (2, 1));
        assert_eq!(p.relation, Relation::Above);
    }
}
