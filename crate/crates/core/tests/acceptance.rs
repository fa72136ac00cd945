//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use irrt_core::audit::{
    run_arc_transform_suite, run_branch_transform_suite, run_closed_form_suite, run_edge_joint_suite,
    run_edge_transform_suite, run_joint_invariance_suite, run_suite, AuditReport,
};
use irrt_core::{irr_fast, irr_naive, DegreeMultiset, FormulaId, SplitMix64, Suite};

const SEED: u64 = 0xC0FFEE;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn check(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let value = f();
    (value, start.elapsed())
}

fn all_agree(report: &AuditReport) -> bool {
    report.formulas.iter().all(|t| t.agreed == t.evaluated)
}

fn closed_forms() -> Outcome {
    let (report, took) = timed(|| run_closed_form_suite(64));
    let count = |f: FormulaId| report.tally(f).map_or(0, |t| t.evaluated);
    // two rows (in, out) per family member or reversal
    let expected_rows = [
        (FormulaId::TransitiveTournament, 2 * 64),
        (FormulaId::LeftRightBipartite, 2 * 32 * 32),
        (FormulaId::DirectedPath, 2 * (2..=64).sum::<usize>()),
        (FormulaId::DirectedCycle, 2 * (3..=64).map(|n| n + 1).sum::<usize>()),
    ];
    let coverage = expected_rows.iter().all(|&(f, rows)| count(f) == rows);
    check(
        report.passed() && all_agree(&report) && coverage && took < Duration::from_secs(5),
        format!(
            "{} rows, {} violations, all agree: {}, coverage: {coverage}, {took:.2?} (limit 5s)",
            report.row_count,
            report.hard_violations.len(),
            all_agree(&report)
        ),
    )
}

fn engine_oracle() -> Outcome {
    let (reports, took) = timed(|| {
        [
            run_edge_joint_suite(1000, SEED),
            run_edge_transform_suite(1000, SEED),
            run_arc_transform_suite(1000, SEED),
        ]
    });
    let rows: usize = reports.iter().map(|r| r.row_count).sum();
    let violations: usize = reports.iter().map(|r| r.hard_violations.len()).sum();
    let mismatched = reports.iter().flat_map(|r| &r.rows).filter(|r| !r.engine_matches_oracle()).count();
    check(
        rows == 3000 && violations == 0 && mismatched == 0 && took < Duration::from_secs(30),
        format!("{rows} rows, {mismatched} engine/oracle mismatches, {violations} violations, {took:.2?} (limit 30s)"),
    )
}

fn formula_audit() -> Outcome {
    let joint = run_edge_joint_suite(1000, SEED);
    let witness = |id: usize, label: &str, oracle: u64, predicted: i64| {
        let row = &joint.rows[id];
        row.operation.starts_with(label)
            && row.irr_after_oracle == oracle
            && row
                .prediction(FormulaId::RegularJointEqual)
                .is_some_and(|p| p.predicted == predicted && !p.agrees)
    };
    let witnesses = witness(0, "joint(C3 ", 8, 10) && witness(1, "joint(K1 ", 0, 2);
    let reproducible = {
        let again = run_edge_joint_suite(1000, SEED);
        again.to_csv() == joint.to_csv() && again.to_json() == joint.to_json()
    };
    let transform = run_edge_transform_suite(1000, SEED);
    let arc = run_arc_transform_suite(1000, SEED);
    let mut pcts = Vec::new();
    let mut emitted = true;
    for report in [&joint, &transform, &arc] {
        for t in &report.formulas {
            pcts.push(format!("{}={:.1}%", t.formula, t.agreement_pct));
        }
    }
    for f in [
        FormulaId::JointInterim,
        FormulaId::JointFinalA,
        FormulaId::JointFinalB,
        FormulaId::RegularJointEqual,
        FormulaId::RegularJointGreater,
        FormulaId::EdgeTransformEqual,
        FormulaId::EdgeTransformAbove,
        FormulaId::EdgeTransformBelow,
    ] {
        emitted &= joint.tally(f).or(transform.tally(f)).is_some();
    }
    emitted &= arc.formulas.len() == 6;
    check(
        witnesses && reproducible && emitted,
        format!("witnesses: {witnesses}, reproducible: {reproducible}, rates emitted: {emitted} [{}]", pcts.join(" ")),
    )
}

fn desk_transforms() -> Outcome {
    let report = run_edge_transform_suite(3, SEED);
    let p4 = [(0, 1), (1, 2), (2, 3)];
    let k13 = [(0, 1), (0, 2), (0, 3)];
    let tri = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3)];
    let expected = [
        (FormulaId::EdgeTransformAbove, common::irr_edges(4, &p4), common::irr_edges(4, &[(0, 2), (1, 2), (2, 3)]), 4, 6),
        (FormulaId::EdgeTransformBelow, common::irr_edges(4, &k13), common::irr_edges(4, &[(0, 2), (0, 3), (2, 1)]), 6, 4),
        (FormulaId::EdgeTransformEqual, common::irr_edges(6, &tri), common::irr_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (1, 3)]), 8, 8),
    ];
    let mut ok = true;
    let mut seen = Vec::new();
    for (row, (formula, before, after, lit_before, lit_after)) in report.rows.iter().zip(expected) {
        let p = row.prediction(formula);
        ok &= (before, after) == (lit_before, lit_after)
            && (row.irr_before, row.irr_after_oracle) == (before, after)
            && p.is_some_and(|p| p.agrees && p.predicted == after as i64);
        seen.push(format!("{formula} {before}->{after}"));
    }
    check(ok && report.rows.len() == 3, seen.join(", "))
}

fn branch_decrease() -> Outcome {
    let (report, took) = timed(|| run_branch_transform_suite(500, SEED));
    let increases = report.rows.iter().filter(|r| r.irr_after_oracle >= r.irr_before).count();
    check(
        report.passed() && increases == 0 && all_agree(&report) && report.row_count == 500 && took < Duration::from_secs(10),
        format!("{} instances, {increases} non-decreasing, {took:.2?} (limit 10s)", report.row_count),
    )
}

fn joint_invariance() -> Outcome {
    let report = run_joint_invariance_suite(200, SEED);
    let failures = report.rows.iter().filter(|r| r.has_disagreement()).count();
    check(
        report.passed() && failures == 0 && report.row_count == 200,
        format!("{} instances, {failures} violations", report.row_count),
    )
}

fn fast_path() -> Outcome {
    let mut rng = SplitMix64::new(SEED);
    let mut mismatches = 0;
    for _ in 0..500 {
        let n = rng.range_inclusive(1, 2000);
        let max_degree = rng.range_inclusive(0, n);
        let degrees: Vec<usize> = (0..n).map(|_| rng.below(max_degree + 1)).collect();
        let dm = DegreeMultiset::from_degrees(degrees.iter().copied());
        let fast = irr_fast(&dm);
        if fast != irr_naive(&dm) || fast != common::irr_of_degrees(&degrees) {
            mismatches += 1;
        }
    }
    let degrees: Vec<usize> = (0..1_000_000).map(|_| rng.below(1_000_000)).collect();
    let (value, took) = timed(|| irr_fast(&DegreeMultiset::from_degrees(degrees.iter().copied())));
    check(
        mismatches == 0 && took < Duration::from_secs(1),
        format!("500 multisets, {mismatches} mismatches; 10^6 vertices -> {value} in {took:.2?} (limit 1s, includes multiset build)"),
    )
}

fn reproducibility() -> Outcome {
    let mut identical = true;
    for suite in Suite::ALL {
        let n = if suite == Suite::ClosedForms { 32 } else { 300 };
        let (a, b) = (run_suite(suite, n, SEED), run_suite(suite, n, SEED));
        identical &= a.to_csv() == b.to_csv() && a.to_json() == b.to_json();
    }
    check(identical, format!("{} suites, csv and json byte-identical: {identical}", Suite::ALL.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("closed forms", closed_forms),
        ("engine equals oracle", engine_oracle),
        ("formula audit with pinned witnesses", formula_audit),
        ("transformation desk instances", desk_transforms),
        ("branch moves strictly decrease", branch_decrease),
        ("joint invariance", joint_invariance),
        ("fast path equivalence and speed", fast_path),
        ("report reproducibility", reproducibility),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = run();
        let status = if outcome.pass { "PASS" } else { "FAIL" };
        if !outcome.pass {
            failed += 1;
        }
        println!("{status} {} {name}: {}", i + 1, outcome.detail);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
