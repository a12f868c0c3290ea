use std::collections::BTreeSet;

use srtriple::exact::{int, rat};
use srtriple::verify::{run_suite, Status, SuiteName, ANCHORS};

#[test]
fn iso13_example_passes() {
    let r = run_suite(SuiteName::Iso13, 42, 100, &int(1));
    assert!(r.passed());
    assert_eq!(r.mode, "formal");
}

#[test]
fn full_closure_decomposes_every_pair() {
    let r = run_suite(SuiteName::FullClosure, 42, 0, &int(1));
    assert!(r.passed());
    assert_eq!(r.checks.iter().filter(|c| c.name.starts_with('[')).count(), 276);
}

#[test]
fn cartan_example_passes() {
    assert!(run_suite(SuiteName::Cartan, 0, 0, &int(1)).passed());
}

#[test]
fn gl4_reports_the_diagonal_lr_mismatch() {
    let r = run_suite(SuiteName::Gl4Closure, 42, 0, &int(1));
    let failed: Vec<_> = r.failures().map(|c| c.name.clone()).collect();
    assert_eq!(failed.len(), 6, "{failed:?}");
    for c in r.failures() {
        assert!(c.anchor.contains("[L_μν, R_μν]"), "{}", c.anchor);
        assert!(c.witness.is_some());
    }
    assert!(r.checks.iter().any(|c| c.name.contains("closes") && c.status == Status::Pass));
}

#[test]
fn reports_are_deterministic_apart_from_timing() {
    for name in [SuiteName::KillingDs, SuiteName::LinePreservation] {
        let a = run_suite(name, 7, 10, &rat(1, 4));
        let b = run_suite(name, 7, 10, &rat(1, 4));
        assert_eq!(a.to_text(), b.to_text());
        let strip = |s: String| s.lines().filter(|l| !l.contains("elapsed_ms")).collect::<Vec<_>>().join("\n");
        assert_eq!(strip(a.to_json()), strip(b.to_json()));
    }
}

#[test]
fn different_seeds_sample_different_points() {
    let a = run_suite(SuiteName::LinePreservation, 1, 5, &int(1));
    let b = run_suite(SuiteName::LinePreservation, 2, 5, &int(1));
    assert!(a.passed() && b.passed());
    assert_ne!(a.to_json(), b.to_json());
}

#[test]
fn all_covers_every_suite_and_anchor() {
    let r = run_suite(SuiteName::All, 42, 4, &int(1));
    let suites: BTreeSet<&str> = r.checks.iter().filter_map(|c| c.name.split_once(": ").map(|(s, _)| s)).collect();
    let expected: BTreeSet<&str> = SuiteName::EACH.iter().map(|s| s.as_str()).collect();
    assert_eq!(suites, expected);
    let used: BTreeSet<&str> = r.checks.iter().map(|c| c.anchor.as_str()).collect();
    for anchor in ANCHORS {
        assert!(used.contains(anchor), "no check cites {anchor}");
    }
    assert!(r.failures().all(|c| c.name.starts_with("gl4_closure: ")));
}

#[test]
fn text_report_footer_counts_checks() {
    let r = run_suite(SuiteName::Im4Cross, 42, 0, &int(1));
    assert!(r.to_text().ends_with("16 checks, 16 passed, 0 failed\n"));
}

#[test]
fn radius_must_be_rational_for_embedding() {
    let r = run_suite(SuiteName::EmbeddingConsistency, 42, 3, &int(2));
    assert!(!r.passed());
    assert!(r.failures().any(|c| c.name == "radius"));
}

#[test]
fn scaled_curvature_still_passes() {
    for name in [SuiteName::KillingAds, SuiteName::EmbeddingConsistency, SuiteName::SecondPoincare] {
        let r = run_suite(name, 42, 10, &rat(1, 25));
        assert!(r.passed(), "{}", r.to_text());
    }
}
