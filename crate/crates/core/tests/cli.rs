//! End-to-end checks of the `length-lab` binary: exit codes, output shape,
//! and the certificate workflow.

use std::path::Path;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_length-lab"))
}

fn corpus() -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpora/standard.corpus")
        .display()
        .to_string()
}

#[test]
fn check_on_the_standard_corpus_passes() {
    let out = bin()
        .args(["check", &corpus()])
        .output()
        .expect("binary runs");
    assert!(
        out.status.success(),
        "stdout:\n{}\nstderr:\n{}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("0 failed"));
    assert!(text.contains("nonsoluble-length-step"));
}

#[test]
fn check_emits_parseable_json() {
    let out = bin()
        .args(["check", &corpus(), "--only", "golden", "--format", "json"])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let reports =
        length_lab::report::parse_json_report(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert!(reports.iter().all(|r| r.checker.starts_with("golden:")));
    assert!(reports.len() > 20);
}

#[test]
fn csv_has_the_documented_header() {
    let out = bin()
        .args(["check", &corpus(), "--only", "golden:order", "--format", "csv"])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("entry,checker,hypothesis,lhs,rhs,slack,pass,timing_ms\n"));
}

#[test]
fn malformed_corpus_exits_with_usage_error() {
    let fixture = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/bad_arity.corpus");
    let out = bin()
        .args(["check", fixture.to_str().unwrap()])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 1"), "stderr: {err}");
}

#[test]
fn info_reports_invariants() {
    let out = bin()
        .args(["info", &corpus(), "--group", "S5"])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("order: 120"));
    assert!(text.contains("lambda: 1"));
    assert!(text.contains("hstar: 2"));
}

#[test]
fn series_command_prints_the_tower() {
    let out = bin()
        .args([
            "series",
            &corpus(),
            "--group",
            "S4",
            "--series",
            "gfitting",
        ])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("kind: generalized-fitting"));
    assert_eq!(text.lines().count(), 5); // header + four terms
}

#[test]
fn certificate_workflow() {
    let cert = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpora/certificates/a5_wr_a5.cert");
    let out = bin()
        .args([
            "certify",
            &corpus(),
            "--group",
            "A5wrA5",
            "--certificate",
            cert.to_str().unwrap(),
        ])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("nonsoluble length <= 2"));

    // a wrong certificate is rejected with a nonzero exit
    let dir = std::env::temp_dir().join("length-lab-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.cert");
    std::fs::write(&bad, "semisimple: (0 1 2 3 4), (0 1 2)\n").unwrap();
    let out = bin()
        .args([
            "certify",
            &corpus(),
            "--group",
            "A5wrA5",
            "--certificate",
            bad.to_str().unwrap(),
        ])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tight_limits_degrade_to_capacity_rows() {
    let out = bin()
        .args([
            "check",
            &corpus(),
            "--only",
            "golden:lambda",
            "--enumeration-limit",
            "50",
        ])
        .output()
        .expect("binary runs");
    // capacity rows are recorded but goldens no longer match: exit 1
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("CAPACITY"));
}
