use std::process::{Command, Output};

use qrpw_core::suite::REPORT_SCHEMA;
use serde_json::Value;

fn qrpw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qrpw"))
        .args(args)
        .env_remove("QRPW_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = qrpw(&all);
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)))
}

#[test]
fn reduce_prints_normal_form() {
    let o = qrpw(&["reduce", "z1 z0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "q^-1 z0 z1");
    let v = json(&["reduce", "--algebra", "sigma-", "--l", "1", "x x*"]);
    assert_eq!(v["normal_form"], "1 - y^2 z");
}

#[test]
fn degree_and_coinvariants() {
    let v = json(&["degree", "--table", "rho:1,2", "z0 z1"]);
    assert_eq!(v["degree"], 3);
    let o = qrpw(&["coinv", "--algebra", "sigma-", "--l", "2", "--table", "phi", "--bound", "2", "--express"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("y^2 z"));
}

#[test]
fn verification_commands_pass() {
    for args in [
        vec!["verify-presentation", "--algebra", "rp-", "--l", "2", "--trials", "50"],
        vec!["verify-morphism", "fix+", "--l", "3"],
        vec!["strongconn-check", "--l", "2", "--nmax", "3"],
        vec!["can-check", "--l", "2", "--nmax", "2"],
        vec!["cleft-check", "--l", "3"],
        vec!["unit-probe", "--l", "2"],
        vec!["almost-free", "--k", "1", "--l", "2"],
        vec!["hg-search", "--k", "1", "--l", "1", "--bound", "2"],
        vec!["hg-search", "--k", "1", "--l", "2", "--bound", "4"],
        vec!["gamma", "--case", "pos", "--l", "3", "--n", "-1"],
        vec!["rep-check", "--case", "neg", "--l", "2", "--r", "1", "--dim", "40", "--q", "0.5"],
        vec!["rep-check", "--case", "pos", "--l", "2", "--theta", "0.25"],
    ] {
        let o = qrpw(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
    }
}

#[test]
fn failed_checks_exit_one() {
    let o = qrpw(&["cleft-check", "--l", "3", "--candidate", "x'"]);
    assert_eq!(o.status.code(), Some(1));
    let o = qrpw(&["rep-check", "--l", "2", "--dim", "4", "--include-boundary"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["reduce", "z0 +"],
        vec!["reduce", "--algebra", "nope", "z0"],
        vec!["degree", "--table", "phi", "z0"],
        vec!["suite", "nope"],
        vec!["cleft-check", "--l", "2"],
        vec!["frobnicate"],
        vec!["rep-check", "--q", "1.5"],
    ] {
        let o = qrpw(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn omega_accepts_negative_degrees() {
    let v = json(&["omega", "--l", "1", "--n", "-1"]);
    assert!(v.to_string().contains("x"));
}

#[test]
fn projector_outputs() {
    let v = json(&["projector", "--l", "2", "--n", "1"]);
    assert_eq!(v["size"], 3);
    assert_eq!(v["entries"].as_array().unwrap().len(), 3);
    let o = qrpw(&["projector", "--l", "2", "--n", "1", "--latex"]);
    assert!(stdout(&o).contains("\\begin{pmatrix}"));
    let o = qrpw(&["chern", "--l", "2", "--n", "1"]);
    assert!(stdout(&o).contains("1 + (q^-4 + q^-2 - 1 - q^2) a + (-q^-6 + q^2) a^2"));
}

#[test]
fn suite_reports_match_schema() {
    let schema: Value = serde_json::from_str(REPORT_SCHEMA).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    for args in [
        vec!["suite", "thm-main", "--l", "2", "--nmax", "4"],
        vec!["suite", "thm-hg", "--pairs", "1,2", "2,1", "2,3", "--bound", "6"],
        vec!["suite", "chern", "--l", "2", "--nmax", "2"],
        vec!["suite", "almost-free"],
        vec!["suite", "positive-trivial"],
        vec!["suite", "reps", "--l", "1", "--q", "0.5", "--timings"],
    ] {
        let v = json(&args);
        let errors: Vec<String> = validator.iter_errors(&v).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
        assert_eq!(v["passed"], true, "{args:?}");
    }
    let bad = serde_json::json!({"suite": "x", "passed": true});
    assert!(!validator.is_valid(&bad));
}

#[test]
fn output_is_deterministic() {
    let a = qrpw(&["--json", "suite", "chern", "--l", "1", "--nmax", "1"]);
    let b = qrpw(&["--json", "suite", "chern", "--l", "1", "--nmax", "1"]);
    assert_eq!(a.stdout, b.stdout);
    let a = qrpw(&["verify-presentation", "--seed", "7", "--trials", "30"]);
    let b = Command::new(env!("CARGO_BIN_EXE_qrpw"))
        .args(["verify-presentation", "--trials", "30"])
        .env("QRPW_SEED", "7")
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn suite_checks_are_sorted() {
    let v = json(&["suite", "thm-main", "--l", "1", "--nmax", "2"]);
    let ids: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert!(v["checks"][0].get("wall_ms").is_none());
}
