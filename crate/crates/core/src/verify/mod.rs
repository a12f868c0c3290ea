//! Named verification suites bundling the algebraic and geometric checks
//! into pass/fail reports.

pub mod fixtures;
pub mod suites;

pub use fixtures::{fixture, Combo};
pub use suites::{run_suite, Check, Status, SuiteName, SuiteReport, ANCHORS};
