//! Differential audit: brute-force ground truth versus the incremental
//! engine and every published formula.
//!
//! Each suite produces [`AuditRow`]s. The engine must match the oracle on
//! every row; that is the only hard failure. Formula disagreements are data
//! and are tallied per formula.

mod suites;
mod walk;

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::predictors::{FormulaId, Prediction};

pub use suites::{
    run_arc_transform_suite, run_branch_transform_suite, run_closed_form_suite, run_edge_joint_suite,
    run_edge_transform_suite, run_joint_invariance_suite, run_suite, Suite,
};
pub use walk::root_derivative_walk;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredictionCheck {
    pub formula: FormulaId,
    pub predicted: i64,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditRow {
    pub instance_id: u64,
    pub seed: u64,
    pub operation: String,
    pub irr_before: u64,
    pub irr_after_oracle: u64,
    pub engine_delta: i64,
    pub predictions: Vec<PredictionCheck>,
}

impl AuditRow {
    pub fn new(instance_id: u64, seed: u64, operation: String, irr_before: u64, irr_after_oracle: u64, engine_delta: i64) -> Self {
        AuditRow { instance_id, seed, operation, irr_before, irr_after_oracle, engine_delta, predictions: Vec::new() }
    }

    pub fn oracle_delta(&self) -> i64 {
        self.irr_after_oracle as i64 - self.irr_before as i64
    }

    pub fn engine_matches_oracle(&self) -> bool {
        self.engine_delta == self.oracle_delta()
    }

    /// Records `prediction`, judged against this row's oracle values.
    pub fn predict(&mut self, prediction: Prediction) {
        let agrees = prediction.agrees_with(self.irr_before, self.irr_after_oracle);
        self.predict_with(prediction, agrees);
    }

    pub fn predict_with(&mut self, prediction: Prediction, agrees: bool) {
        self.predictions.push(PredictionCheck { formula: prediction.formula, predicted: prediction.value, agrees });
    }

    pub fn prediction(&self, formula: FormulaId) -> Option<&PredictionCheck> {
        self.predictions.iter().find(|p| p.formula == formula)
    }

    pub fn has_disagreement(&self) -> bool {
        self.predictions.iter().any(|p| !p.agrees)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FormulaTally {
    pub formula: FormulaId,
    pub evaluated: usize,
    pub agreed: usize,
    pub disagreed: usize,
    pub agreement_pct: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditReport {
    pub suite: String,
    pub seed: u64,
    pub instance_count: usize,
    pub row_count: usize,
    pub config: BTreeMap<String, String>,
    pub formulas: Vec<FormulaTally>,
    /// Engine/oracle mismatches and other hard-invariant breaches.
    pub hard_violations: Vec<String>,
    pub disagreements: Vec<AuditRow>,
    #[serde(skip)]
    pub rows: Vec<AuditRow>,
}

pub const CSV_HEADER: [&str; 9] = [
    "instance_id",
    "seed",
    "operation",
    "irr_before",
    "irr_after_oracle",
    "engine_delta",
    "formula_id",
    "predicted",
    "agrees",
];

impl AuditReport {
    pub(crate) fn build(
        suite: &str,
        seed: u64,
        config: BTreeMap<String, String>,
        rows: Vec<AuditRow>,
        mut hard_violations: Vec<String>,
    ) -> Self {
        for row in &rows {
            if !row.engine_matches_oracle() {
                hard_violations.push(format!(
                    "instance {} ({}): engine delta {} but oracle delta {}",
                    row.instance_id,
                    row.operation,
                    row.engine_delta,
                    row.oracle_delta()
                ));
            }
        }
        let mut tallies: BTreeMap<FormulaId, (usize, usize)> = BTreeMap::new();
        for check in rows.iter().flat_map(|r| &r.predictions) {
            let entry = tallies.entry(check.formula).or_default();
            entry.0 += 1;
            if check.agrees {
                entry.1 += 1;
            }
        }
        let formulas = tallies
            .into_iter()
            .map(|(formula, (evaluated, agreed))| FormulaTally {
                formula,
                evaluated,
                agreed,
                disagreed: evaluated - agreed,
                agreement_pct: 100.0 * agreed as f64 / evaluated as f64,
            })
            .collect();
        let instance_count = rows.iter().map(|r| r.instance_id).collect::<BTreeSet<_>>().len();
        let disagreements = rows.iter().filter(|r| r.has_disagreement()).cloned().collect();
        AuditReport {
            suite: suite.to_string(),
            seed,
            instance_count,
            row_count: rows.len(),
            config,
            formulas,
            hard_violations,
            disagreements,
            rows,
        }
    }

    pub fn passed(&self) -> bool {
        self.hard_violations.is_empty()
    }

    pub fn tally(&self, formula: FormulaId) -> Option<&FormulaTally> {
        self.formulas.iter().find(|t| t.formula == formula)
    }

    /// One line per prediction per row; rows without predictions get one
    /// line with the last three fields empty.
    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(CSV_HEADER).expect("in-memory write");
        for row in &self.rows {
            let prefix = [
                row.instance_id.to_string(),
                row.seed.to_string(),
                row.operation.clone(),
                row.irr_before.to_string(),
                row.irr_after_oracle.to_string(),
                row.engine_delta.to_string(),
            ];
            if row.predictions.is_empty() {
                let record: Vec<String> = prefix.iter().cloned().chain(["".into(), "".into(), "".into()]).collect();
                w.write_record(&record).expect("in-memory write");
            }
            for p in &row.predictions {
                let record: Vec<String> = prefix
                    .iter()
                    .cloned()
                    .chain([p.formula.to_string(), p.predicted.to_string(), p.agrees.to_string()])
                    .collect();
                w.write_record(&record).expect("in-memory write");
            }
        }
        String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 fields")
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
