use std::process::Command;

use serde_json::Value;

use poset_polytopes::cli::{self, EXIT_BUDGET, EXIT_CLAIM_FAILED, EXIT_OK, EXIT_USAGE};
use poset_polytopes::io;

fn run(args: &[&str]) -> (i32, Value) {
    let mut out = Vec::new();
    let code = cli::run(std::iter::once("ppoly").chain(args.iter().copied()), &mut out);
    let text = String::from_utf8(out).unwrap();
    let value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}"));
    (code, value)
}

const CHAIN2: &str = r#"{"d":2,"covers":[[1,2]]}"#;
const ANTICHAIN2: &str = r#"{"d":2,"covers":[]}"#;

#[test]
fn build_then_analyze_omega_oc() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("P.json");
    std::fs::write(&p, CHAIN2).unwrap();
    let poly = dir.path().join("omega.json");
    let (code, _) = run(&[
        "build", "--kind", "omega-oc", p.to_str().unwrap(), p.to_str().unwrap(),
        "-o", poly.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    let (code, report) = run(&["analyze", "--reflexive", "--normal", poly.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(report["reflexive"], Value::Bool(true));
    assert_eq!(report["normal"]["verdict"], "normal");
    assert!(report["ehrhart"].is_null());
}

#[test]
fn build_round_trip_is_identical() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gamma.json");
    let (code, _) = run(&["build", "--kind", "gamma-oc", "@p6", "-o", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let back = io::load_polytope(path.to_str().unwrap()).unwrap();
    let p = poset_polytopes::fixtures::p6();
    let direct = poset_polytopes::gamma(
        &poset_polytopes::order_polytope(&p),
        &poset_polytopes::chain_polytope(&p),
    )
    .unwrap();
    assert_eq!(back, direct);
    assert_eq!(back.vertices(), direct.vertices());
}

#[test]
fn analyze_reports_exact_numbers_in_stable_order() {
    let (code, report) = run(&["analyze", "@simplex-3"]);
    assert_eq!(code, EXIT_OK);
    let keys: Vec<&String> = report.as_object().unwrap().keys().collect();
    assert_eq!(keys[0], "input");
    assert_eq!(report["volume"], serde_json::json!({"num": 2, "den": 3}));
    assert_eq!(report["normalized_volume"], "4");
    assert_eq!(report["vertex_count"], 4);
    assert_eq!(report["facet_count"], 4);
    assert_eq!(report["f_vector"]["counts"], serde_json::json!([4, 6, 4]));
}

#[test]
fn volume_methods_cross_check() {
    let (code, v) = run(&["volume", "--method", "linext", "--method", "ehrhart", ANTICHAIN2, ANTICHAIN2]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["linext"], serde_json::json!({"num": 2, "den": 1}));
    assert_eq!(v["ehrhart"], serde_json::json!({"num": 2, "den": 1}));
    assert_eq!(v["cross_check"], Value::Bool(true));
}

#[test]
fn groebner_report() {
    let (code, r) = run(&["groebner", "--family", "oc", "--degree", "3", CHAIN2, CHAIN2]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(r["spair_ok"], Value::Bool(true));
    assert_eq!(r["squarefree"], Value::Bool(true));
    assert_eq!(r["variable_count"], 7);
    assert_eq!(r["injective"], serde_json::json!([true, true, true, true]));
}

#[test]
fn ehrhart_subcommand() {
    let (code, e) = run(&["ehrhart", "@simplex-2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(e["polynomial"], "(3/2)n^2 + (3/2)n + 1");
}

#[test]
fn classify2d_histogram() {
    let (code, c) = run(&["classify2d"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(c["classes"].as_array().unwrap().len(), 16);
    let hist: Vec<u64> = (3..=9).map(|b| c["histogram"][b.to_string()].as_u64().unwrap()).collect();
    assert_eq!(hist, vec![1, 3, 2, 4, 2, 3, 1]);
}

#[test]
fn errors_are_machine_readable() {
    let (code, e) = run(&["build", "--kind", "order", r#"{"d":2,"covers":[[1,2],[2,1]]}"#]);
    assert_eq!(code, EXIT_USAGE);
    assert_eq!(e["error"]["kind"], "cycle_detected");

    let (code, e) = run(&["build", "--kind", "nonsense", CHAIN2]);
    assert_eq!(code, EXIT_USAGE);
    assert_eq!(e["error"]["kind"], "usage");

    let (code, e) = run(&["volume", "--method", "linext", CHAIN2, r#"{"d":2,"covers":[[2,1]]}"#]);
    assert_eq!(code, EXIT_USAGE);
    assert_eq!(e["error"]["kind"], "no_common_linear_extension");

    let (code, e) = run(&["analyze", "--normal", "--point-budget", "5", "@simplex-3"]);
    assert_eq!(code, EXIT_BUDGET);
    assert_eq!(e["error"]["kind"], "budget_exceeded");
}

#[test]
fn failed_claim_exits_with_one() {
    let (code, r) = run(&["volume", "--method", "linext", "--method", "ehrhart", CHAIN2, CHAIN2]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(r["cross_check"], Value::Bool(true));
    // The order family needs a common linear extension; without one the
    // explicit generators are not a Gröbner basis of the toric ideal.
    let (code, r) = run(&["groebner", "--family", "oo", CHAIN2, r#"{"d":2,"covers":[[2,1]]}"#]);
    assert_eq!(code, EXIT_CLAIM_FAILED, "{r}");
    assert_eq!(r["ok"], Value::Bool(false));
}

#[test]
fn binary_exit_codes() {
    let exe = env!("CARGO_BIN_EXE_ppoly");
    let out = Command::new(exe).args(["build", "--kind", "chain", CHAIN2]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["ambient_dim"], 2);
    let out = Command::new(exe).args(["analyze", "/nonexistent/file.json"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
    let out = Command::new(exe).arg("--help").output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
}
