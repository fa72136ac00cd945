use crate::error::{Error, Result};
use crate::generators::orient_by_labeling;
use crate::graph::{EditOp, Graph};
use crate::irregularity::{exact_arc_delta_for_edit, irr_digraph, IrrPair};

/// Orients `root` by `labels` (lower label to higher), then applies the arc
/// edits in order, tracking `(irr_in, irr_out)` through exact deltas. The
/// result has `edits.len() + 1` entries, starting with the oriented root.
pub fn root_derivative_walk(root: &Graph, labels: &[usize], edits: &[EditOp]) -> Result<Vec<IrrPair>> {
    let mut d = orient_by_labeling(root, labels)?;
    let mut pair = irr_digraph(&d);
    let mut trajectory = Vec::with_capacity(edits.len() + 1);
    trajectory.push(pair);
    for op in edits {
        if !op.is_arc_edit() {
            return Err(Error::KindMismatch { op: op.to_string(), kind: "directed" });
        }
        let delta = exact_arc_delta_for_edit(&d, op)?;
        d = d.apply_edit(op)?;
        pair = pair.apply(delta);
        trajectory.push(pair);
    }
    Ok(trajectory)
}
