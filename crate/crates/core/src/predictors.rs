//! Published incremental formulas and closed forms, evaluated literally.
//!
//! Nothing here looks at a graph: every predictor takes counts and sizes
//! only. Whether a prediction is right is decided elsewhere, against the
//! brute-force oracle.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::DegreeMode;
use crate::irregularity::IrrPair;
use crate::partitions::{ArcPartitionCounts, JointPartitionCounts, Relation, TransformPartitionCounts};

/// What a predicted value is compared against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PredictionKind {
    /// The irregularity change caused by the edit.
    Delta,
    /// The irregularity after the edit (or of the constructed graph).
    Absolute,
    /// The sign of the change (`-1`, `0`, `1`).
    Sign,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormulaId {
    /// Edge-joint delta, interim form.
    JointInterim,
    /// Edge-joint delta, closed form in the `b`-type counts.
    JointFinalA,
    /// Edge-joint delta, closed form in the `a`-type counts.
    JointFinalB,
    /// Joint of two regular graphs of equal degree.
    RegularJointEqual,
    /// Joint of two regular graphs of different degree.
    RegularJointGreater,
    EdgeTransformEqual,
    EdgeTransformAbove,
    EdgeTransformBelow,
    InArcEqual,
    InArcAbove,
    InArcBelow,
    OutArcEqual,
    OutArcAbove,
    OutArcBelow,
    DirectedPath,
    DirectedCycle,
    TransitiveTournament,
    LeftRightBipartite,
    /// Moving a hanging tree to a pendant vertex strictly lowers irregularity.
    BranchDecrease,
    /// Joints at degree-matched endpoint pairs agree in irregularity.
    JointInvariance,
}

impl FormulaId {
    pub const ALL: [FormulaId; 20] = [
        FormulaId::JointInterim,
        FormulaId::JointFinalA,
        FormulaId::JointFinalB,
        FormulaId::RegularJointEqual,
        FormulaId::RegularJointGreater,
        FormulaId::EdgeTransformEqual,
        FormulaId::EdgeTransformAbove,
        FormulaId::EdgeTransformBelow,
        FormulaId::InArcEqual,
        FormulaId::InArcAbove,
        FormulaId::InArcBelow,
        FormulaId::OutArcEqual,
        FormulaId::OutArcAbove,
        FormulaId::OutArcBelow,
        FormulaId::DirectedPath,
        FormulaId::DirectedCycle,
        FormulaId::TransitiveTournament,
        FormulaId::LeftRightBipartite,
        FormulaId::BranchDecrease,
        FormulaId::JointInvariance,
    ];

    pub fn kind(self) -> PredictionKind {
        match self {
            FormulaId::JointInterim | FormulaId::JointFinalA | FormulaId::JointFinalB => PredictionKind::Delta,
            FormulaId::BranchDecrease => PredictionKind::Sign,
            _ => PredictionKind::Absolute,
        }
    }

    pub fn is_delta(self) -> bool {
        self.kind() == PredictionKind::Delta
    }

    pub fn name(self) -> &'static str {
        match self {
            FormulaId::JointInterim => "JointInterim",
            FormulaId::JointFinalA => "JointFinalA",
            FormulaId::JointFinalB => "JointFinalB",
            FormulaId::RegularJointEqual => "RegularJointEqual",
            FormulaId::RegularJointGreater => "RegularJointGreater",
            FormulaId::EdgeTransformEqual => "EdgeTransformEqual",
            FormulaId::EdgeTransformAbove => "EdgeTransformAbove",
            FormulaId::EdgeTransformBelow => "EdgeTransformBelow",
            FormulaId::InArcEqual => "InArcEqual",
            FormulaId::InArcAbove => "InArcAbove",
            FormulaId::InArcBelow => "InArcBelow",
            FormulaId::OutArcEqual => "OutArcEqual",
            FormulaId::OutArcAbove => "OutArcAbove",
            FormulaId::OutArcBelow => "OutArcBelow",
            FormulaId::DirectedPath => "DirectedPath",
            FormulaId::DirectedCycle => "DirectedCycle",
            FormulaId::TransitiveTournament => "TransitiveTournament",
            FormulaId::LeftRightBipartite => "LeftRightBipartite",
            FormulaId::BranchDecrease => "BranchDecrease",
            FormulaId::JointInvariance => "JointInvariance",
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for FormulaId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Prediction {
    pub formula: FormulaId,
    pub value: i64,
}

impl Prediction {
    pub fn new(formula: FormulaId, value: i64) -> Self {
        Prediction { formula, value }
    }

    /// Compares against the oracle's before/after values.
    pub fn agrees_with(&self, irr_before: u64, irr_after: u64) -> bool {
        let delta = irr_after as i64 - irr_before as i64;
        match self.formula.kind() {
            PredictionKind::Delta => self.value == delta,
            PredictionKind::Absolute => self.value == irr_after as i64,
            PredictionKind::Sign => self.value == delta.signum(),
        }
    }
}

fn int(x: usize) -> i64 {
    x as i64
}

/// `(a - b) + (a* - b*) + (c - d) + (c* - d*) - 2`.
pub fn joint_interim_delta(p: &JointPartitionCounts) -> i64 {
    (int(p.a) - int(p.b)) + (int(p.a_star) - int(p.b_star)) + (int(p.c) - int(p.d)) + (int(p.c_star) - int(p.d_star))
        - 2
}

/// The two closed forms: `2n - 2(b + b* + d + d*) - 2` and
/// `2(a + a* + c + c*) - 2n + 2`.
pub fn joint_final_deltas(p: &JointPartitionCounts) -> (i64, i64) {
    let n = int(p.n);
    let form_a = 2 * n - 2 * (int(p.b) + int(p.b_star) + int(p.d) + int(p.d_star)) - 2;
    let form_b = 2 * (int(p.a) + int(p.a_star) + int(p.c) + int(p.c_star)) - 2 * n + 2;
    (form_a, form_b)
}

/// Joint of an `n`-vertex regular graph (degree `deg_u`) with an
/// `m`-vertex regular graph (degree `deg_v <= deg_u`).
pub fn regular_joint_irr(n: usize, m: usize, deg_u: usize, deg_v: usize) -> Result<Prediction> {
    match deg_u.cmp(&deg_v) {
        std::cmp::Ordering::Equal => Ok(Prediction::new(FormulaId::RegularJointEqual, 2 * int(n + m) - 2)),
        std::cmp::Ordering::Greater => Ok(Prediction::new(
            FormulaId::RegularJointGreater,
            int(n) * int(m) * int(deg_u - deg_v) + 2 * (int(n) - 1),
        )),
        std::cmp::Ordering::Less => Err(Error::Precondition(format!(
            "regular joint formula needs deg_u >= deg_v, got {deg_u} < {deg_v}"
        ))),
    }
}

fn piecewise(base: u64, p: &TransformPartitionCounts, ids: [FormulaId; 3]) -> Prediction {
    let base = base as i64;
    match p.relation {
        Relation::Equal => Prediction::new(ids[0], base),
        Relation::Above => Prediction::new(ids[1], base + 2 * int(p.m)),
        Relation::Below => Prediction::new(ids[2], base - 2 * (int(p.h) + int(p.l1))),
    }
}

/// Predicted irregularity after an edge-transformation from a graph with
/// irregularity `base`.
pub fn edge_transform_predict(base: u64, p: &TransformPartitionCounts) -> Prediction {
    piecewise(
        base,
        p,
        [FormulaId::EdgeTransformEqual, FormulaId::EdgeTransformAbove, FormulaId::EdgeTransformBelow],
    )
}

/// Directed analogue of [`edge_transform_predict`] in the counts' mode.
pub fn arc_transform_predict(base: u64, p: &ArcPartitionCounts) -> Result<Prediction> {
    let ids = match p.mode {
        DegreeMode::In => [FormulaId::InArcEqual, FormulaId::InArcAbove, FormulaId::InArcBelow],
        DegreeMode::Out => [FormulaId::OutArcEqual, FormulaId::OutArcAbove, FormulaId::OutArcBelow],
        DegreeMode::Undirected => {
            return Err(Error::ModeMismatch { mode: "undirected", kind: "directed" });
        }
    };
    Ok(piecewise(base, &p.counts, ids))
}

/// Which arc of the consecutively directed path `v1 -> ... -> vn` is
/// reversed. `Interior(i)` names arc `(v_i, v_{i+1})`, 1-based, with
/// `2 <= i <= n - 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathReversal {
    None,
    FirstArc,
    Interior(usize),
    LastArc,
}

impl PathReversal {
    /// Classifies the 1-based arc index `i` of an `n`-vertex path.
    pub fn for_arc(n: usize, i: usize) -> Result<PathReversal> {
        if n < 2 || i == 0 || i >= n {
            return Err(Error::Precondition(format!("no arc {i} in a path on {n} vertices")));
        }
        Ok(if i == 1 {
            PathReversal::FirstArc
        } else if i == n - 1 {
            PathReversal::LastArc
        } else {
            PathReversal::Interior(i)
        })
    }
}

pub fn directed_path_irr(n: usize, reversal: PathReversal) -> Result<IrrPair> {
    if n < 2 {
        return Err(Error::Precondition(format!("directed path needs n >= 2, got {n}")));
    }
    let n64 = n as u64;
    let plain = n64 - 1;
    let bumped = 3 * n64 - 5;
    Ok(match reversal {
        PathReversal::None => IrrPair::new(plain, plain),
        PathReversal::FirstArc => IrrPair::new(plain, bumped),
        PathReversal::LastArc => IrrPair::new(bumped, plain),
        PathReversal::Interior(i) => {
            if i < 2 || i + 2 > n {
                return Err(Error::Precondition(format!("arc {i} is not interior in a path on {n} vertices")));
            }
            IrrPair::new(bumped, bumped)
        }
    })
}

pub fn directed_cycle_irr(n: usize, reversed: bool) -> Result<IrrPair> {
    if n < 3 {
        return Err(Error::Precondition(format!("directed cycle needs n >= 3, got {n}")));
    }
    let v = if reversed { 2 * (n as u64 - 1) } else { 0 };
    Ok(IrrPair::new(v, v))
}

/// `n (n^2 - 1) / 6`, the same for in- and out-degrees.
pub fn transitive_tournament_irr(n: usize) -> u64 {
    let n = n as u128;
    if n == 0 {
        return 0;
    }
    let numerator = n * (n * n - 1);
    debug_assert_eq!(numerator % 6, 0);
    (numerator / 6) as u64
}

/// `(m^2 n, m n^2)`.
pub fn left_right_bipartite_irr(m: usize, n: usize) -> IrrPair {
    let (m, n) = (m as u64, n as u64);
    IrrPair::new(m * m * n, m * n * n)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `[a, b, a*, b*, c, d, c*, d*]` and `n`.
    fn counts(k: [usize; 8], n: usize) -> JointPartitionCounts {
        let [a, b, a_star, b_star, c, d, c_star, d_star] = k;
        JointPartitionCounts { a, b, a_star, b_star, c, d, c_star, d_star, r: 0, s: 0, n }
    }

    #[test]
    fn joint_forms() {
        let triangles = counts([2, 0, 3, 0, 2, 0, 3, 0], 6);
        assert_eq!(joint_interim_delta(&triangles), 8);
        assert_eq!(joint_final_deltas(&triangles), (10, 10));

        let k4_c3 = counts([3, 0, 3, 0, 2, 0, 0, 4], 7);
        assert_eq!(joint_interim_delta(&k4_c3), 2);
        assert_eq!(joint_final_deltas(&k4_c3), (4, 4));

        let zero = JointPartitionCounts::default();
        assert_eq!(joint_interim_delta(&zero), -2);
        assert_eq!(joint_final_deltas(&zero), (-2, 2));
    }

    #[test]
    fn regular_joint() {
        assert_eq!(regular_joint_irr(3, 3, 2, 2).unwrap(), Prediction::new(FormulaId::RegularJointEqual, 10));
        assert_eq!(regular_joint_irr(4, 3, 3, 2).unwrap(), Prediction::new(FormulaId::RegularJointGreater, 18));
        assert_eq!(regular_joint_irr(1, 1, 0, 0).unwrap().value, 2);
        assert!(regular_joint_irr(3, 4, 2, 3).is_err());
    }

    fn tp(h: usize, s: usize, t: usize, m: usize, l1: usize, relation: Relation) -> TransformPartitionCounts {
        TransformPartitionCounts { h, s, t, m, l: s - m, m1: t - l1, l1, relation }
    }

    #[test]
    fn edge_transform_cases() {
        assert_eq!(edge_transform_predict(8, &tp(5, 1, 0, 0, 0, Relation::Equal)).value, 8);
        let p = edge_transform_predict(4, &tp(3, 1, 0, 1, 0, Relation::Above));
        assert_eq!((p.formula, p.value), (FormulaId::EdgeTransformAbove, 6));
        let p = edge_transform_predict(6, &tp(1, 0, 3, 0, 0, Relation::Below));
        assert_eq!((p.formula, p.value), (FormulaId::EdgeTransformBelow, 4));
    }

    #[test]
    fn arc_transform_cases() {
        let arc = |mode, counts| ArcPartitionCounts { mode, counts };
        let p = arc_transform_predict(5, &arc(DegreeMode::In, tp(1, 4, 0, 0, 0, Relation::Equal))).unwrap();
        assert_eq!((p.formula, p.value), (FormulaId::InArcEqual, 5));
        let p = arc_transform_predict(3, &arc(DegreeMode::Out, tp(1, 4, 0, 2, 0, Relation::Above))).unwrap();
        assert_eq!((p.formula, p.value), (FormulaId::OutArcAbove, 7));
        let p = arc_transform_predict(9, &arc(DegreeMode::In, tp(2, 0, 3, 0, 1, Relation::Below))).unwrap();
        assert_eq!((p.formula, p.value), (FormulaId::InArcBelow, 3));
        assert!(arc_transform_predict(9, &arc(DegreeMode::Undirected, tp(1, 0, 0, 0, 0, Relation::Equal))).is_err());
    }

    #[test]
    fn path_forms() {
        assert_eq!(directed_path_irr(5, PathReversal::None).unwrap(), IrrPair::new(4, 4));
        assert_eq!(directed_path_irr(5, PathReversal::Interior(3)).unwrap(), IrrPair::new(10, 10));
        assert_eq!(directed_path_irr(5, PathReversal::FirstArc).unwrap(), IrrPair::new(4, 10));
        assert_eq!(directed_path_irr(5, PathReversal::LastArc).unwrap(), IrrPair::new(10, 4));
        assert_eq!(directed_path_irr(2, PathReversal::None).unwrap(), IrrPair::new(1, 1));
        assert!(directed_path_irr(5, PathReversal::Interior(1)).is_err());
        assert!(directed_path_irr(5, PathReversal::Interior(4)).is_err());
        assert!(directed_path_irr(1, PathReversal::None).is_err());
        assert_eq!(PathReversal::for_arc(5, 1).unwrap(), PathReversal::FirstArc);
        assert_eq!(PathReversal::for_arc(5, 4).unwrap(), PathReversal::LastArc);
        assert_eq!(PathReversal::for_arc(5, 2).unwrap(), PathReversal::Interior(2));
        assert!(PathReversal::for_arc(5, 5).is_err());
    }

    #[test]
    fn cycle_and_complete_forms() {
        assert_eq!(directed_cycle_irr(7, false).unwrap(), IrrPair::new(0, 0));
        assert_eq!(directed_cycle_irr(7, true).unwrap(), IrrPair::new(12, 12));
        assert_eq!(directed_cycle_irr(3, true).unwrap(), IrrPair::new(4, 4));
        assert!(directed_cycle_irr(2, false).is_err());
        assert_eq!(transitive_tournament_irr(4), 10);
        assert_eq!(transitive_tournament_irr(1), 0);
        assert_eq!(transitive_tournament_irr(6), 35);
    }

    #[test]
    fn bipartite_forms() {
        assert_eq!(left_right_bipartite_irr(2, 3), IrrPair::new(12, 18));
        for n in 1..10 {
            assert_eq!(left_right_bipartite_irr(1, n), IrrPair::new(n as u64, (n * n) as u64));
        }
        assert_eq!(left_right_bipartite_irr(1, 1), IrrPair::new(1, 1));
    }

    #[test]
    fn agreement_by_kind() {
        assert!(Prediction::new(FormulaId::JointInterim, 8).agrees_with(0, 8));
        assert!(!Prediction::new(FormulaId::RegularJointEqual, 10).agrees_with(0, 8));
        assert!(Prediction::new(FormulaId::BranchDecrease, -1).agrees_with(6, 4));
        assert!(!Prediction::new(FormulaId::BranchDecrease, -1).agrees_with(4, 4));
    }
}
