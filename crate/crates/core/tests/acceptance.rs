//! Acceptance battery: one test per criterion, each printing a PASS/FAIL
//! line. All tolerances are exact. The same checks back the CLI `selftest`
//! subcommand.

use grm_core::selftest::{self, CriterionResult, DEFAULT_SEED};

fn jobs() -> usize {
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

fn report(result: CriterionResult) {
    let status = if result.passed { "PASS" } else { "FAIL" };
    println!(
        "criterion {}: {status} — {} [{} ms] {}",
        result.id, result.name, result.elapsed_ms, result.details
    );
    assert!(
        result.passed,
        "criterion {} failed: {}",
        result.id, result.details
    );
}

#[test]
fn criterion_1_formula_agreement_exhaustive() {
    report(selftest::criterion_1(jobs()));
}

#[test]
fn criterion_2_classification_completeness() {
    report(selftest::criterion_2(jobs()));
}

#[test]
fn criterion_3_constructor_grid() {
    report(selftest::criterion_3(jobs()));
}

#[test]
fn criterion_4_affine_orbit_invariance() {
    report(selftest::criterion_4(jobs(), DEFAULT_SEED));
}

#[test]
fn criterion_5_linear_factor_round_trips() {
    report(selftest::criterion_5(jobs()));
}

#[test]
fn criterion_6_blocking_sets() {
    report(selftest::criterion_6(jobs()));
}

#[test]
fn criterion_7_point_mass_certificates() {
    report(selftest::criterion_7(jobs()));
}

#[test]
fn criterion_8_regime_overlap_consistency() {
    report(selftest::criterion_8(jobs()));
}
