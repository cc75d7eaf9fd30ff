//! Verification reports: serializable bundles of named checks.
//!
//! The canonical JSON form omits wall-clock timing entirely, so two
//! runs on the same input produce byte-identical files; timings appear
//! only on the human-readable streams.

use exholo_core::cert::{Certificate, Status};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: String,
    pub expected: String,
    pub actual: String,
    pub details: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<CheckRecord>,
    pub toolchain: String,
    /// Excluded from the canonical serialization.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

pub fn toolchain_string() -> String {
    format!("exholo {}", env!("CARGO_PKG_VERSION"))
}

impl Report {
    pub fn from_certificate(suite: &str, cert: Certificate, elapsed_ms: u64) -> Self {
        Report {
            suite: suite.to_string(),
            checks: cert
                .checks
                .into_iter()
                .map(|c| CheckRecord {
                    name: c.name,
                    status: c.status.as_str().to_string(),
                    expected: c.expected,
                    actual: c.actual,
                    details: c.details,
                })
                .collect(),
            toolchain: toolchain_string(),
            elapsed_ms: Some(elapsed_ms),
        }
    }

    pub fn error(suite: &str, message: String) -> Self {
        Report {
            suite: suite.to_string(),
            checks: vec![CheckRecord {
                name: format!("{suite}.setup"),
                status: Status::Error.as_str().to_string(),
                expected: String::new(),
                actual: String::new(),
                details: message,
            }],
            toolchain: toolchain_string(),
            elapsed_ms: None,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == "pass")
    }

    /// The canonical form: timing stripped.
    pub fn canonical(&self) -> Report {
        let mut r = self.clone();
        r.elapsed_ms = None;
        r
    }

    /// Human-readable lines, one per check, plus a summary.
    pub fn human_lines(&self) -> Vec<String> {
        let mut out = Vec::with_capacity(self.checks.len() + 1);
        for c in &self.checks {
            let mark = match c.status.as_str() {
                "pass" => "ok  ",
                "fail" => "FAIL",
                _ => "ERR ",
            };
            let mut line = format!("  [{mark}] {}", c.name);
            if c.status != "pass" {
                line.push_str(&format!(" — expected {}, got {}", c.expected, c.actual));
            }
            if !c.details.is_empty() {
                line.push_str(&format!(" ({})", c.details));
            }
            out.push(line);
        }
        let passed = self.checks.iter().filter(|c| c.status == "pass").count();
        let timing = self
            .elapsed_ms
            .map(|ms| format!(" in {ms} ms"))
            .unwrap_or_default();
        out.push(format!(
            "suite {}: {}/{} checks passed{timing}",
            self.suite,
            passed,
            self.checks.len()
        ));
        out
    }

    /// Markdown section for this report.
    pub fn markdown(&self) -> String {
        let mut s = format!("## Suite `{}`\n\n", self.suite);
        s.push_str("| check | status | expected | actual | details |\n");
        s.push_str("|---|---|---|---|---|\n");
        for c in &self.checks {
            s.push_str(&format!(
                "| `{}` | {} | {} | {} | {} |\n",
                c.name,
                c.status,
                escape_md(&c.expected),
                escape_md(&c.actual),
                escape_md(&c.details)
            ));
        }
        s.push('\n');
        s
    }
}

fn escape_md(s: &str) -> String {
    s.replace('|', "\\|")
}

/// Canonical pretty JSON for one or many reports, ending in a newline.
pub fn reports_to_canonical_json(reports: &[Report]) -> String {
    let canonical: Vec<Report> = reports.iter().map(Report::canonical).collect();
    let body = if canonical.len() == 1 {
        serde_json::to_string_pretty(&canonical[0]).expect("report serialization")
    } else {
        serde_json::to_string_pretty(&canonical).expect("report serialization")
    };
    format!("{body}\n")
}
