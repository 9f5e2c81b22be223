use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopf-partial"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn identity_grid_passes() {
    let out = run(&["verify-identities", "--n-max", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert!(report["checked"].as_u64().unwrap() > 0);
    assert!(report["failures"].as_array().unwrap().is_empty());
}

#[test]
fn unknown_identity_tag_is_a_usage_error() {
    assert_eq!(run(&["verify-identities", "--tag", "NOPE"]).status.code(), Some(2));
}

#[test]
fn h4_example_is_emitted_and_checks() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("h4.json");
    let out = run(&["examples", "--paper", "h4", "--target", "truncpoly:3", "--w", "z", "--out", path(&file)]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert!(report["displays"].as_array().unwrap().iter().all(|d| d["matches"] == Value::Bool(true)));
    let check = run(&["check-action", path(&file)]);
    assert_eq!(check.status.code(), Some(0));
    assert_eq!(json(&check)["pas"], Value::Bool(true));
}

#[test]
fn missing_input_exits_two() {
    let out = run(&["check-action", "missing.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing.json"));
}

#[test]
fn malformed_json_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.json");
    std::fs::write(&file, "{\"hopf\": 3}").unwrap();
    assert_eq!(run(&["check-action", path(&file)]).status.code(), Some(2));
}

#[test]
fn built_algebras_check_and_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for f in [&a, &b] {
        assert_eq!(run(&["build", "taft", "--n", "3", "--q-power", "2", "--out", path(f)]).status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(run(&["check-hopf", path(&a)]).status.code(), Some(0));
    assert_eq!(run(&["check-hopf", "nichols:3"]).status.code(), Some(0));
}

#[test]
fn action_and_coaction_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let act = dir.path().join("act.json");
    let co = dir.path().join("co.json");
    let back = dir.path().join("back.json");
    let built = run(&["construct-action", "--hopf", "taft:3:1", "--target", "truncpoly:3", "--w", "z", "--out", path(&act)]);
    assert_eq!(built.status.code(), Some(0));
    assert_eq!(run(&["dualize", "--direction", "action-to-coaction", path(&act), "--out", path(&co)]).status.code(), Some(0));
    assert_eq!(run(&["check-coaction", path(&co)]).status.code(), Some(0));
    assert_eq!(run(&["dualize", "--direction", "coaction-to-action", path(&co), "--out", path(&back)]).status.code(), Some(0));
    let a: Value = serde_json::from_slice(&std::fs::read(&act).unwrap()).unwrap();
    let b: Value = serde_json::from_slice(&std::fs::read(&back).unwrap()).unwrap();
    assert_eq!(a["rows"], b["rows"]);
}

#[test]
fn constructed_coaction_checks() {
    let dir = tempfile::tempdir().unwrap();
    let co = dir.path().join("co.json");
    let out = run(&["construct-coaction", "--hopf", "nichols:3", "--target", "field", "--w", "2", "--w", "-1/3", "--out", path(&co)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(run(&["check-coaction", path(&co)]).status.code(), Some(0));
}

#[test]
fn refused_construction_reports_the_precondition() {
    let out = run(&["construct-action", "--hopf", "nichols:2", "--target", "matrix:2", "--w", "e12"]);
    assert_eq!(out.status.code(), Some(1));
    let report = json(&out);
    assert!(report["refused"].is_string());
    assert!(!report["precondition"].is_null());
}

#[test]
fn broken_table_fails_with_a_counterexample() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("act.json");
    run(&["construct-action", "--hopf", "taft:2", "--target", "field", "--w", "3/2", "--out", path(&file)]);
    let mut table: Value = serde_json::from_slice(&std::fs::read(&file).unwrap()).unwrap();
    // g·1 = 1 instead of 0
    table["rows"][2][0] = table["rows"][0][0].clone();
    std::fs::write(&file, serde_json::to_string(&table).unwrap()).unwrap();
    let out = run(&["check-action", path(&file)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!json(&out)["first_counterexample"].is_null());
}

#[test]
fn mutation_run_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("act.json");
    run(&["construct-action", "--hopf", "taft:2", "--target", "truncpoly:2", "--w", "z", "--out", path(&file)]);
    let first = run(&["mutate", path(&file), "--count", "25", "--seed", "7"]);
    let second = run(&["mutate", path(&file), "--count", "25", "--seed", "7"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn worker_count_is_honoured() {
    let out = Command::new(env!("CARGO_BIN_EXE_hopf-partial"))
        .args(["check-hopf", "taft:3"])
        .env("HOPF_PARTIAL_WORKERS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let bad = Command::new(env!("CARGO_BIN_EXE_hopf-partial"))
        .args(["check-hopf", "taft:3"])
        .env("HOPF_PARTIAL_WORKERS", "many")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
