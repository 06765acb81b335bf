use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qvariety")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn cyclo_lists_sets_in_order() {
    let v = json(&["cyclo", "--moduli", "15", "--base", "4"]);
    let reps: Vec<u64> = v["sets"].as_array().unwrap().iter().map(|s| s["rep"].as_u64().unwrap()).collect();
    assert_eq!(reps, [0, 1, 2, 3, 5, 6, 7, 10, 11]);
    assert_eq!(v["sets"][1]["elements"], serde_json::json!([1, 4]));
}

#[test]
fn build_prints_header_then_rows() {
    let (code, out, _) = run(&["build", "--Q", "8", "--N", "8", "--J", "1", "--delta", "1;2"]);
    assert_eq!(code, 0);
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines[0], "GF(2^3) 7 2");
    assert_eq!(lines.len(), 3);
    assert!(lines[1..].iter().all(|l| l.split_whitespace().count() == 7));
}

#[test]
fn verify_exact_reports_both_distances() {
    let v = json(&["verify", "--Q", "8", "--N", "8", "--J", "1", "--delta", "1;2", "--exact"]);
    assert_eq!(v["distance"], 6);
    assert_eq!(v["dual_distance"], 3);
}

#[test]
fn check_flags_a_non_orthogonal_code() {
    let v = json(&["check", "--Q", "8", "--N", "8", "--J", "1", "--delta", "1"]);
    assert_eq!(v["self_orthogonal"], true);
    let v = json(&["check", "--Q", "8", "--N", "8", "--J", "1", "--delta", "1;6"]);
    assert_eq!(v["self_orthogonal"], false);
}

#[test]
fn design_uni_reports_params() {
    let v = json(&["design", "uni", "--rule", "half-field-euclidean", "--p", "2", "--r", "4", "--s", "2", "--N", "16", "--t", "2"]);
    assert_eq!(v["params"]["n"], 15);
    assert_eq!(v["params"]["k"], 7);
    assert_eq!(v["params"]["d_lower"], 3);
    assert_eq!(v["delta"], serde_json::json!([1, 2, 4, 8]));
}

#[test]
fn design_uni_rejects_bad_length() {
    let (code, _, err) = run(&["design", "uni", "--rule", "half-field-euclidean", "--p", "2", "--r", "4", "--s", "2", "--N", "15", "--t", "2"]);
    assert_eq!(code, 2);
    assert!(err.contains("not coprime"), "{err}");
}

#[test]
fn fixture_exit_codes() {
    let (code, out, _) = run(&["fixture", "len80_f3"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("n,k,d_lower,q,rule,certified\n"));
    let (code, _, err) = run(&["fixture", "len94_f4"]);
    assert_eq!(code, 1);
    assert!(err.contains("row 3"), "{err}");
    let (code, _, err) = run(&["fixture", "nope"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown fixture"));
}

#[test]
fn fixture_list_names_all() {
    let (code, out, _) = run(&["fixture", "--list"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 13);
}
