//! Certificate plumbing: named checks with expected/actual values.
//!
//! Certification functions return a list of checks instead of a bare
//! boolean so that reports can show exactly which identity or dimension
//! count failed, and with what values.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub details: String,
}

/// A named list of checks; the unit produced by every `*_check`
/// operation and consumed by the verification suites.
#[derive(Clone, Debug, Default)]
pub struct Certificate {
    pub checks: Vec<Check>,
}

impl Certificate {
    pub fn new() -> Self {
        Certificate { checks: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Records `name` with an equality verdict on displayable values.
    pub fn check_eq<T: PartialEq + fmt::Debug>(&mut self, name: &str, expected: T, actual: T) {
        let status = if expected == actual { Status::Pass } else { Status::Fail };
        self.checks.push(Check {
            name: name.to_string(),
            status,
            expected: alloc::format!("{expected:?}"),
            actual: alloc::format!("{actual:?}"),
            details: String::new(),
        });
    }

    pub fn check_true(&mut self, name: &str, value: bool) {
        self.check_eq(name, true, value);
    }

    pub fn check_with_details<T: PartialEq + fmt::Debug>(
        &mut self,
        name: &str,
        expected: T,
        actual: T,
        details: String,
    ) {
        let status = if expected == actual { Status::Pass } else { Status::Fail };
        self.checks.push(Check {
            name: name.to_string(),
            status,
            expected: alloc::format!("{expected:?}"),
            actual: alloc::format!("{actual:?}"),
            details,
        });
    }

    pub fn error(&mut self, name: &str, details: String) {
        self.checks.push(Check {
            name: name.to_string(),
            status: Status::Error,
            expected: String::new(),
            actual: String::new(),
            details,
        });
    }

    pub fn extend(&mut self, other: Certificate) {
        self.checks.extend(other.checks);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failed(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.status != Status::Pass).collect()
    }
}
