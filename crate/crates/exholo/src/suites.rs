//! The named verification suites and the bounded-parallel runner.
//!
//! Each suite maps onto one certified statement; `all` runs every suite
//! in canonical order. The heavyweight artifact chain is built once per
//! process and shared immutably across suites and threads.

use std::collections::VecDeque;
use std::sync::{Mutex, OnceLock};
use std::time::Instant;

use exholo_core::cert::Certificate;
use exholo_core::holo::{
    canonical_restriction_certificate, cor15_chain, cross_product_certificate, g2_certificate,
    holonomy_certificate, reductive_complement_certificate, triality_certificate, G2Artifacts,
};
use exholo_core::quadric::{prop21_case_i, prop21_case_ii, prop21_case_iii, thm22_certificate};
use exholo_core::symdec::{classification_certificate, model_certificate, STANDARD_MODELS};

use crate::report::Report;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Thm12,
    Lemma13,
    Rem14,
    Cor15,
    Cor16,
    Thm17,
    Prop21,
    Thm22,
}

pub const ALL_SUITES: [Suite; 8] = [
    Suite::Thm12,
    Suite::Lemma13,
    Suite::Rem14,
    Suite::Cor15,
    Suite::Cor16,
    Suite::Thm17,
    Suite::Prop21,
    Suite::Thm22,
];

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Thm12 => "thm-1-2",
            Suite::Lemma13 => "lemma-1-3",
            Suite::Rem14 => "rem-1-4",
            Suite::Cor15 => "cor-1-5",
            Suite::Cor16 => "cor-1-6",
            Suite::Thm17 => "thm-1-7",
            Suite::Prop21 => "prop-2-1",
            Suite::Thm22 => "thm-2-2",
        }
    }

    pub fn parse(name: &str) -> Option<Vec<Suite>> {
        if name == "all" {
            return Some(ALL_SUITES.to_vec());
        }
        ALL_SUITES
            .iter()
            .find(|s| s.name() == name)
            .map(|s| vec![*s])
    }
}

/// The shared artifact chain; safe to access from any thread.
fn artifacts() -> Result<&'static G2Artifacts, String> {
    static ARTIFACTS: OnceLock<Result<G2Artifacts, String>> = OnceLock::new();
    ARTIFACTS
        .get_or_init(|| G2Artifacts::build().map_err(|e| e.to_string()))
        .as_ref()
        .map_err(|e| e.clone())
}

/// Classification bounds used by the thm-1-2 suite: they cover double
/// the table's largest block without changing the outcome.
pub const CLASSIFY_BOUNDS: (usize, usize, usize) = (32, 4, 8);

fn run_certificate(suite: Suite) -> Result<Certificate, String> {
    match suite {
        Suite::Thm12 => {
            let (p, k, n) = CLASSIFY_BOUNDS;
            let mut cert = classification_certificate(p, k, n).map_err(|e| e.to_string())?;
            for (label, _) in STANDARD_MODELS {
                cert.extend(model_certificate(label).map_err(|e| e.to_string())?);
            }
            Ok(cert)
        }
        Suite::Lemma13 => triality_certificate().map_err(|e| e.to_string()),
        Suite::Rem14 => canonical_restriction_certificate().map_err(|e| e.to_string()),
        Suite::Cor15 => {
            let art = artifacts()?;
            let (_, cert) = cor15_chain(art).map_err(|e| e.to_string())?;
            Ok(cert)
        }
        Suite::Cor16 => {
            let art = artifacts()?;
            let mut cert = holonomy_certificate(art).map_err(|e| e.to_string())?;
            cert.extend(g2_certificate(art).map_err(|e| e.to_string())?);
            cert.extend(reductive_complement_certificate(art).map_err(|e| e.to_string())?);
            Ok(cert)
        }
        Suite::Thm17 => {
            let art = artifacts()?;
            cross_product_certificate(art).map_err(|e| e.to_string())
        }
        Suite::Prop21 => {
            let art = artifacts()?;
            let mut cert = prop21_case_i(art).map_err(|e| e.to_string())?;
            let (data, cert_ii) = prop21_case_ii(art).map_err(|e| e.to_string())?;
            cert.extend(cert_ii);
            let (_, cert_iii) = prop21_case_iii(art, &data).map_err(|e| e.to_string())?;
            cert.extend(cert_iii);
            Ok(cert)
        }
        Suite::Thm22 => {
            let art = artifacts()?;
            thm22_certificate(art).map_err(|e| e.to_string())
        }
    }
}

pub fn run_suite(suite: Suite) -> Report {
    let start = Instant::now();
    match run_certificate(suite) {
        Ok(cert) => Report::from_certificate(
            suite.name(),
            cert,
            start.elapsed().as_millis() as u64,
        ),
        Err(msg) => Report::error(suite.name(), msg),
    }
}

/// Runs the suites with at most `jobs` worker threads; the reports come
/// back in the order of the input slice regardless of scheduling.
pub fn run_suites(suites: &[Suite], jobs: usize) -> Vec<Report> {
    let jobs = jobs.max(1).min(suites.len().max(1));
    if jobs <= 1 || suites.len() <= 1 {
        return suites.iter().map(|&s| run_suite(s)).collect();
    }
    let queue: Mutex<VecDeque<(usize, Suite)>> =
        Mutex::new(suites.iter().copied().enumerate().collect());
    let results: Mutex<Vec<Option<Report>>> = Mutex::new(vec![None; suites.len()]);
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let job = queue.lock().unwrap().pop_front();
                match job {
                    None => break,
                    Some((idx, suite)) => {
                        let report = run_suite(suite);
                        results.lock().unwrap()[idx] = Some(report);
                    }
                }
            });
        }
    });
    results
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|r| r.expect("every suite produces a report"))
        .collect()
}
