use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;
use transversal_core::code::{serialize_code, steane7};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_transversal")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

fn steane_file(dir: &TempDir) -> String {
    write(dir, "steane.code", &serialize_code(&steane7()))
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json report")
}

#[test]
fn validate_exit_codes() {
    let dir = TempDir::new().unwrap();
    let ok = run(&["validate", &steane_file(&dir)]);
    assert_eq!(ok.status.code(), Some(0));

    let bad = write(&dir, "bad.code", "n=2 k=0\n[stabilizers]\nXI\nZI\n");
    let out = run(&["validate", &bad]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("anticommute"), "{}", stdout(&out));

    let malformed = write(&dir, "malformed.code", "n=7 k=1\n[stabilizers]\nXXQ\n");
    let out = run(&["validate", &malformed]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    assert_eq!(run(&["validate", "/nonexistent/file"]).status.code(), Some(2));
}

#[test]
fn analyze_steane_json() {
    let out = run(&["--json", "analyze", "--catalog", "steane7"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["classification"]["k_max"], 1);
    assert_eq!(v["hierarchy"][0]["level"]["Level"], 2);
    assert_eq!(v["two_qubit_family"]["k"], 1);
    assert_eq!(v["irrational"]["logical_phase_forced_zero"], true);
    assert_eq!(v["engine_agreement"], true);
    assert_eq!(v["oracle"], "ran");
}

#[test]
fn analyze_output_is_deterministic() {
    let a = run(&["--json", "analyze", "--catalog", "c422"]);
    let b = run(&["--json", "analyze", "--catalog", "c422"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn analyze_large_code_marks_oracle_skipped() {
    let out = run(&["analyze", "--catalog", "rm31"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("oracle: skipped"), "{text}");
    assert!(text.contains("k_max: 3"));
}

#[test]
fn analyze_fivequbit_uses_group_engine() {
    let v = json(&run(&["--json", "analyze", "--catalog", "fivequbit"]));
    assert_eq!(v["classification"]["k_max"], 0);
    assert_eq!(v["classification"]["wedge_ran"], false);
    assert_eq!(v["classification"]["group_ran"], true);
}

#[test]
fn check_accept_and_reject() {
    let out = run(&["--json", "check", "--catalog", "steane7", "--theta", "1/2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"]["logical_diagonal"], serde_json::json!(["0", "3/2"]));

    let out = run(&["--json", "check", "--catalog", "steane7", "--theta", "2/3"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["verdict"]["preserves_codespace"], false);
    assert_eq!(v["witnesses"][0]["required_modulus"], 6);

    let out = run(&["check", "--catalog", "steane7", "--theta", "1/4"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn check_phi_only_difference_matters() {
    let a = run(&["--json", "check", "--catalog", "steane7", "--theta", "3/4", "--phi", "1/4"]);
    let b = run(&["--json", "check", "--catalog", "steane7", "--theta", "1/2"]);
    assert_eq!(json(&a)["verdict"], json(&b)["verdict"]);
}

#[test]
fn check_thetas_notes_dropped_qubits() {
    let out = run(&["check", "--catalog", "c422", "--thetas", "1/2,1/2,1/2,0"]);
    assert!(stdout(&out).contains("dropped: [3]"), "{}", stdout(&out));
}

#[test]
fn bad_angles_are_usage_errors() {
    assert_eq!(run(&["check", "--catalog", "steane7", "--theta", "1/0"]).status.code(), Some(2));
    assert_eq!(run(&["check", "--catalog", "steane7", "--thetas", "1/2,1/2"]).status.code(), Some(2));
    assert_eq!(run(&["check", "--catalog", "steane7"]).status.code(), Some(2));
    assert_eq!(run(&["check", "--catalog", "nosuchcode", "--theta", "1"]).status.code(), Some(2));
}

#[test]
fn two_qubit_gates() {
    let out = run(&["--json", "two-qubit", "--catalog", "steane7", "--gate", "0,0,0,1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"]["logical_diagonal"], serde_json::json!(["0", "0", "0", "1"]));
    assert_eq!(v["in_two_qubit_family"], true);
    assert_eq!(v["engine_agreement"], true);

    assert_eq!(run(&["two-qubit", "--catalog", "steane7", "--gate", "0,0,0,1/4"]).status.code(), Some(1));

    let out = run(&["--json", "two-qubit", "--catalog", "c422", "--gate", "0,1/2,1/2,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["verdict"]["logical_diagonal"].as_array().unwrap().len(), 16);
}

#[test]
fn decompress_round_trip() {
    let dir = TempDir::new().unwrap();
    let out = run(&["decompress", &steane_file(&dir), "--qubit", "0", "--m", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let split = write(&dir, "split.code", &stdout(&out));
    assert!(stdout(&run(&["validate", &split])).starts_with("valid [[8,1]]"));

    let before = run(&["--json", "check", "--catalog", "steane7", "--thetas", "1/2,1/2,1/2,1/2,1/2,1/2,1/2"]);
    let after = run(&["--json", "check", &split, "--thetas", "1/4,1/4,1/2,1/2,1/2,1/2,1/2,1/2"]);
    assert_eq!(json(&before)["verdict"], json(&after)["verdict"]);
    assert_eq!(before.status.code(), after.status.code());

    assert_eq!(run(&["decompress", "--catalog", "steane7", "--qubit", "0", "--m", "1"]).status.code(), Some(2));
    assert_eq!(run(&["decompress", "--catalog", "steane7", "--qubit", "9", "--m", "2"]).status.code(), Some(2));
}

#[test]
fn convert_cases() {
    let dir = TempDir::new().unwrap();
    let s = steane_file(&dir);
    let framed = write(&dir, "framed.code", &serialize_code(&steane7().conjugate_s(0)));

    let via_convert = run(&["--json", "convert", &s, &s, "--theta", "1/4"]);
    let via_check = run(&["--json", "check", &s, "--theta", "1/4"]);
    assert_eq!(json(&via_convert)["verdict"], json(&via_check)["verdict"]);
    assert_eq!(via_convert.status.code(), via_check.status.code());

    let out = run(&["--json", "convert", &s, &framed, "--thetas", "1/2,0,0,0,0,0,0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["conversion"]["d4_preserves_source"], true);

    let out = run(&["--json", "convert", &s, &s, "--theta", "1/3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(json(&out)["witnesses"][0].is_object());
}

#[test]
fn file_and_catalog_conflict() {
    let dir = TempDir::new().unwrap();
    let f = steane_file(&dir);
    assert_eq!(run(&["analyze", &f, "--catalog", "steane7"]).status.code(), Some(2));
    assert!(Path::new(&f).exists());
}
