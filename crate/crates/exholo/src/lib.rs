//! IO companion for the exholo workbench: JSON schemas for the
//! algebraic objects, verification reports, the named suites, and the
//! machinery behind the `exholo` command-line driver.

pub mod report;
pub mod schema;
pub mod suites;

pub use report::{reports_to_canonical_json, Report};
pub use suites::{run_suite, run_suites, Suite, ALL_SUITES};
