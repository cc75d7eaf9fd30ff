//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line (visible with `--nocapture`) and asserting the
//! criterion exactly as stated, with its runtime bound.
//!
//! Criterion 9's containment sweep is implemented faithfully and is
//! expected to fail: the exact computation produces a counterexample,
//! reported with an explicit witness. Every other criterion passes.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use exholo_core::cert::Certificate;
use exholo_core::holo::{
    canonical_restriction_certificate, cor15_chain, cross_product_certificate, g2_certificate,
    holonomy_certificate, reductive_complement_certificate, triality_certificate, G2Artifacts,
};
use exholo_core::quadric::{
    curvature_space, obstruction_violation, prop21_case_i, prop21_case_ii, prop21_case_iii,
    quadratic_space,
};
use exholo_core::symdec::{classify, model_certificate, STANDARD_MODELS};

fn artifacts() -> &'static G2Artifacts {
    static ART: OnceLock<G2Artifacts> = OnceLock::new();
    ART.get_or_init(|| G2Artifacts::build().expect("artifact chain"))
}

struct Criterion {
    name: &'static str,
    budget: Duration,
    start: Instant,
    failures: Vec<String>,
}

impl Criterion {
    fn new(name: &'static str, budget_secs: u64) -> Self {
        Criterion {
            name,
            budget: Duration::from_secs(budget_secs),
            start: Instant::now(),
            failures: Vec::new(),
        }
    }

    fn expect(&mut self, what: &str, ok: bool) {
        if !ok {
            self.failures.push(what.to_string());
        }
    }

    fn expect_cert(&mut self, cert: &Certificate) {
        for c in cert.failed() {
            self.failures.push(format!(
                "{} (expected {}, got {})",
                c.name, c.expected, c.actual
            ));
        }
    }

    fn finish(mut self) {
        let elapsed = self.start.elapsed();
        if elapsed > self.budget {
            self.failures.push(format!(
                "runtime {elapsed:?} exceeded budget {:?}",
                self.budget
            ));
        }
        if self.failures.is_empty() {
            println!("{}: PASS ({elapsed:?})", self.name);
        } else {
            println!("{}: FAIL ({elapsed:?}) — {}", self.name, self.failures.join("; "));
        }
        assert!(
            self.failures.is_empty(),
            "{} failed: {}",
            self.name,
            self.failures.join("; ")
        );
    }
}

#[test]
fn criterion_01_classification() {
    let mut c = Criterion::new("criterion 1 (classification sweep)", 600);
    let entries = classify(32, 4, 8).expect("classification");
    let labels: Vec<String> = entries.iter().map(|e| e.mi.label()).collect();
    let expected = ["2", "1.1", "4", "3.1", "2.2", "2.1.1", "1.1.1.1"];
    c.expect(
        &format!("survivors == table (got {labels:?})"),
        labels == expected,
    );
    c.finish();
}

#[test]
fn criterion_02_model_certification() {
    let mut c = Criterion::new("criterion 2 (model certification)", 7 * 60);
    for (label, _) in STANDARD_MODELS {
        let start = Instant::now();
        let cert = model_certificate(label).expect("model build");
        c.expect_cert(&cert);
        c.expect(
            &format!("{} within one minute", label.as_str()),
            start.elapsed() < Duration::from_secs(60),
        );
    }
    c.finish();
}

#[test]
fn criterion_03_triality_branchings() {
    let mut c = Criterion::new("criterion 3 (triality branchings)", 10);
    c.expect_cert(&triality_certificate().expect("triality"));
    c.expect_cert(&canonical_restriction_certificate().expect("restriction"));
    c.finish();
}

#[test]
fn criterion_04_holonomy_representations() {
    let mut c = Criterion::new("criterion 4 (holonomy representations)", 60);
    c.expect_cert(&holonomy_certificate(artifacts()).expect("holonomy"));
    c.finish();
}

#[test]
fn criterion_05_g2_certificate() {
    let mut c = Criterion::new("criterion 5 (spinor stabilizer)", 120);
    let art = artifacts();
    c.expect_cert(&g2_certificate(art).expect("g2"));
    c.expect_cert(&reductive_complement_certificate(art).expect("complement"));
    c.finish();
}

#[test]
fn criterion_06_cross_product() {
    let mut c = Criterion::new("criterion 6 (cross product and stabilizer)", 300);
    c.expect_cert(&cross_product_certificate(artifacts()).expect("cross"));
    c.finish();
}

#[test]
fn criterion_07_subalgebra_chain() {
    let mut c = Criterion::new("criterion 7 (subalgebra chain)", 120);
    let (_, cert) = cor15_chain(artifacts()).expect("chain");
    c.expect_cert(&cert);
    c.finish();
}

#[test]
fn criterion_08_isotropy_comparisons() {
    let mut c = Criterion::new("criterion 8 (isotropy comparisons)", 300);
    let art = artifacts();
    c.expect_cert(&prop21_case_i(art).expect("case i"));
    let (data, cert_ii) = prop21_case_ii(art).expect("case ii");
    c.expect_cert(&cert_ii);
    let (_, cert_iii) = prop21_case_iii(art, &data).expect("case iii");
    c.expect_cert(&cert_iii);
    c.finish();
}

/// The curvature-space dimensions and the negative control hold; the
/// literal containment sweep is asserted exactly as stated and fails
/// with an explicit counterexample (see the project notes for the
/// analysis: the containment defect has rank 14 on the 77-dimensional
/// space, so no nonzero curvature tensor satisfies it at every point).
#[test]
fn criterion_09_curvature_containment() {
    let mut c = Criterion::new("criterion 9 (curvature containment)", 900);
    let art = artifacts();
    let q7 = quadratic_space(&art.vector_rep).expect("q7");
    let k7 = curvature_space(&q7, &art.g2_on_v7.image_subspace()).expect("k7");
    c.expect(&format!("dim K(g2) == 77 (got {})", k7.dim()), k7.dim() == 77);

    let q8 = quadratic_space(&art.spin_rep).expect("q8");
    let k8 = curvature_space(&q8, &art.g2_on_v8.image_subspace()).expect("k8");
    c.expect(&format!("dim K(g2, spin) == 77 (got {})", k8.dim()), k8.dim() == 77);

    let (data, _) = prop21_case_ii(art).expect("case ii");
    let plane7 = data.w_plane.orthocomplement(&art.b7);
    let v7 = obstruction_violation(&k7, &plane7);
    c.expect(
        &format!("containment on the 7-dim plane (violated: {v7:?})"),
        v7.is_none(),
    );

    let (s_plane, _) = prop21_case_iii(art, &data).expect("case iii");
    let v8 = obstruction_violation(&k8, &s_plane);
    c.expect(
        &format!("containment on the 8-dim plane (violated: {v8:?})"),
        v8.is_none(),
    );

    let k_full = curvature_space(&q7, &art.vector_rep.image_subspace()).expect("k so7");
    c.expect(&format!("dim K(so(7)) == 196 (got {})", k_full.dim()), k_full.dim() == 196);
    let control = obstruction_violation(&k_full, &plane7);
    c.expect(
        &format!("negative control produces a witness ({control:?})"),
        control.is_some(),
    );
    c.finish();
}

#[test]
fn criterion_10_reproducibility() {
    let mut c = Criterion::new("criterion 10 (reproducibility)", 1800);
    let dir = std::env::temp_dir().join(format!("exholo-acc-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let run = |path: &std::path::Path| {
        let out = std::process::Command::new(env!("CARGO_BIN_EXE_exholo"))
            .args(["verify", "all", "--json"])
            .arg(path)
            .output()
            .expect("spawn exholo");
        // The full suite carries the documented failing containment
        // checks, so the process reports them via exit code 1.
        assert!(out.status.code() == Some(0) || out.status.code() == Some(1));
    };
    let p1 = dir.join("all1.json");
    let p2 = dir.join("all2.json");
    run(&p1);
    run(&p2);
    let b1 = std::fs::read(&p1).unwrap();
    let b2 = std::fs::read(&p2).unwrap();
    c.expect("two runs produce byte-identical canonical reports", b1 == b2);
    c.expect("report is nonempty", !b1.is_empty());
    std::fs::remove_dir_all(&dir).ok();
    c.finish();
}
