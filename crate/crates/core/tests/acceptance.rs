//! Acceptance suite: every release criterion as one test, each printing a
//! single pass/fail line (visible with `--nocapture`). Exact criteria use
//! exact equality; numeric criteria carry their tolerances inside the
//! checks. Stated wall-clock bounds are asserted.

use std::time::Instant;

use pdet_core::verify::{
    check_append_row_factor, check_closed_forms, check_coefficient_identity, check_exact_core,
    check_exterior_multiplicativity, check_hodge_euler, check_known_values, check_minor_sums,
    check_numeric_backend, check_pseudo_det_algebra, check_rooted_forests, check_spanning_trees,
    Check, Status,
};

const SEED: u64 = 20240617;

fn run(criterion: &str, limit_secs: Option<f64>, check: impl FnOnce() -> Check) {
    let start = Instant::now();
    let result = check();
    let elapsed = start.elapsed().as_secs_f64();
    let line = format!(
        "[{}] {criterion}: {} ({elapsed:.2}s)",
        result.status.as_str().to_uppercase(),
        result.detail
    );
    println!("{line}");
    assert_eq!(result.status, Status::Pass, "{line}");
    if let Some(limit) = limit_secs {
        assert!(
            elapsed < limit,
            "{criterion} took {elapsed:.2}s, bound is {limit}s"
        );
    }
}

#[test]
fn criterion_01_known_value_regressions() {
    run("criterion 1 known-value regressions", Some(1.0), check_known_values);
}

#[test]
fn criterion_02_coefficient_identity_200_pairs() {
    run("criterion 2 coefficient identity", Some(60.0), || {
        check_coefficient_identity(SEED, 200)
    });
}

#[test]
fn criterion_03_exterior_multiplicativity_50_pairs() {
    run("criterion 3 exterior multiplicativity", Some(30.0), || {
        check_exterior_multiplicativity(SEED, 50)
    });
}

#[test]
fn criterion_04_pseudo_det_algebra_50_instances() {
    run("criterion 4 pseudo-determinant algebra", None, || {
        check_pseudo_det_algebra(SEED, 50)
    });
}

#[test]
fn criterion_05_spanning_tree_oracle() {
    run("criterion 5 spanning-tree oracle", Some(60.0), || {
        check_spanning_trees(SEED, 30)
    });
}

#[test]
fn criterion_06_rooted_forest_oracle() {
    run("criterion 6 rooted-forest oracle", None, || {
        check_rooted_forests(SEED, 30)
    });
}

#[test]
fn criterion_07_closed_form_families() {
    run("criterion 7 closed-form families", Some(120.0), || {
        check_closed_forms(true)
    });
}

#[test]
fn criterion_08_hodge_euler_divisibility() {
    run("criterion 8 Hodge/Euler checks", None, || {
        check_hodge_euler(SEED, 30)
    });
}

#[test]
fn criterion_09_append_row_factor() {
    run("criterion 9 append-row factor", None, || {
        check_append_row_factor(SEED, 50)
    });
}

#[test]
fn criterion_10_numeric_backend() {
    run("criterion 10 numeric backend", None, || {
        check_numeric_backend(SEED, 100)
    });
}

// supplementary module suites, same machinery as the selftest command

#[test]
fn suite_exact_core() {
    run("exact-core suite", None, || check_exact_core(SEED, 50));
}

#[test]
fn suite_minor_sums() {
    run("minor-sum suite", None, || check_minor_sums(SEED, 50));
}
