//! Subprocess tests for the command-line driver: exit-code contract,
//! output schemas, and determinism.

use std::process::Command;

fn exholo() -> Command {
    Command::new(env!("CARGO_BIN_EXE_exholo"))
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let out = exholo().args(["verify", "bogus"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("unknown suite"));
}

#[test]
fn odd_sum_multi_index_is_a_usage_error() {
    let out = exholo().args(["build", "2.1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("even"), "message must cite the evenness hypothesis");
}

#[test]
fn empty_solution_space_is_reported() {
    let out = exholo().args(["build", "5.1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("no nonzero bracket coefficients"));
}

#[test]
fn build_g2_writes_a_14_dimensional_algebra() {
    let dir = std::env::temp_dir().join(format!("exholo-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g2.json");
    let out = exholo()
        .args(["build", "3.1", "--json"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("label g2"));
    let value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(value["dim"], 14);
    assert!(value["brackets"].as_array().unwrap().len() > 0);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn build_so8_reports_the_label() {
    let out = exholo().args(["build", "1.1.1.1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("dimension 28"));
    assert!(stderr.contains("label so(8)"));
    let value: serde_json::Value =
        serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["dim"], 28);
}

#[test]
fn passing_suite_exits_zero_and_is_deterministic() {
    let first = exholo().args(["verify", "lemma-1-3"]).output().unwrap();
    assert_eq!(first.status.code(), Some(0));
    let second = exholo().args(["verify", "lemma-1-3"]).output().unwrap();
    assert_eq!(first.stdout, second.stdout, "canonical reports must be byte-identical");
    let report: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(report["suite"], "lemma-1-3");
    assert!(report.get("elapsed_ms").is_none(), "canonical form carries no timing");
}

#[test]
fn classify_default_bounds_reports_the_table() {
    let out = exholo().args(["classify"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let entries = value.as_array().unwrap();
    assert_eq!(entries.len(), 7);
    assert_eq!(entries[0]["multi_index"], serde_json::json!([2]));
    assert_eq!(entries[6]["multi_index"], serde_json::json!([1, 1, 1, 1]));
}

#[test]
fn export_cross_emits_the_tensor() {
    let out = exholo().args(["export-cross"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["dim"], 7);
    assert!(!value["entries"].as_array().unwrap().is_empty());
}

#[test]
fn markdown_report_is_written() {
    let dir = std::env::temp_dir().join(format!("exholo-md-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.md");
    let out = exholo()
        .args(["verify", "rem-1-4", "--md"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let md = std::fs::read_to_string(&path).unwrap();
    assert!(md.contains("## Suite `rem-1-4`"));
    assert!(md.contains("| check | status |"));
    std::fs::remove_dir_all(&dir).ok();
}
