use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_painleve"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = run(&all);
    let doc = serde_json::from_slice(&out.stdout).expect("one JSON document on stdout");
    (doc, out.status.code().unwrap())
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap().to_string())
        .collect()
}

#[test]
fn classify_generic_pair() {
    let (doc, code) = json(&["classify", "--A", "1", "--B", "2"]);
    assert_eq!(code, 0);
    assert_eq!(doc["command"], "classify");
    assert_eq!(doc["result"]["generic"], true);
    assert_eq!(doc["result"]["case"], "Generic");
    assert_eq!(doc["params"]["B"], "2");
    assert_eq!(doc["status"], 0);
}

#[test]
fn classify_equal_coefficients() {
    let (doc, _) = json(&["classify", "--A", "1", "--B", "1"]);
    assert_eq!(doc["result"]["case"], "ChazyII");
    assert_eq!(doc["result"]["generic"], false);
}

#[test]
fn malformed_rational_is_a_usage_error() {
    let out = run(&["classify", "--A", "1", "--B", "x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("malformed rational"));
}

#[test]
fn adapters_exclude_raw_params() {
    assert_eq!(run(&["classify", "--fs-lambda", "1/2", "--A", "1"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--cm-a", "1", "--fs-lambda", "1"]).status.code(), Some(2));
    let (doc, _) = json(&["classify", "--cm-a", "-1/3"]);
    assert_eq!(doc["params"]["A"], "-1/3");
    assert_eq!(doc["params"]["B"], "-1/3");
}

#[test]
fn analyze_reports_indices_two_three() {
    let (doc, code) = json(&["analyze", "--A", "-2", "--B", "-2"]);
    assert_eq!(code, 0);
    assert_eq!(strings(&doc["result"]["expansion"]["fuchs"]), ["-1", "2", "3"]);
    assert_eq!(doc["result"]["painleve"]["verdict"], "passes");
}

#[test]
fn analyze_flags_alpha_in_the_zeta_regime() {
    let (doc, _) = json(&["analyze", "--A", "1", "--B", "0", "--alpha", "1"]);
    let res = doc["result"]["expansion"]["resonances"].as_array().unwrap();
    let first = &res[0];
    assert_eq!(first["j"], 1);
    assert_eq!(first["compatible"], false);
    assert_eq!(doc["result"]["painleve"]["verdict"], "fails");
}

#[test]
fn analyze_linear_equation() {
    let out = run(&["analyze", "--A", "0", "--B", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("linear equation"));
    let (doc, _) = json(&["analyze", "--A", "0", "--B", "0"]);
    assert!(doc["result"]["expansion"].is_null());
}

#[test]
fn analyze_degenerate_balance_falls_back() {
    let (doc, code) = json(&["analyze", "--A", "2", "--B", "-1"]);
    assert_eq!(code, 0);
    assert!(doc["result"]["expansion"].is_null());
    assert!(doc["warnings"][0].as_str().unwrap().contains("A + 2B = 0"));
    assert!(doc["result"]["painleve"]["verdict"].is_string());
}

#[test]
fn analyze_rejects_short_order() {
    assert_eq!(run(&["analyze", "--A", "1", "--B", "2", "--N", "5"]).status.code(), Some(2));
}

#[test]
fn solve_simply_periodic_row() {
    let (doc, code) = json(&["solve", "--A", "1", "--B", "2", "--beta", "5"]);
    assert_eq!(code, 0);
    let sols = doc["result"]["solutions"].as_array().unwrap();
    let periodic: Vec<&Value> = sols.iter().filter(|s| s["family"] == "SimplyPeriodic").collect();
    assert_eq!(periodic.len(), 2);
    let ks: Vec<&str> = periodic.iter().map(|s| s["params"]["k"].as_str().unwrap()).collect();
    assert_eq!(ks, ["5", "-5"]);
    for s in sols {
        assert_eq!(s["verification"]["verified"], true);
    }
}

#[test]
fn solve_falkner_skan_minus_one() {
    let (doc, code) = json(&["solve", "--fs-lambda", "-1"]);
    assert_eq!(code, 0);
    let sols = doc["result"]["solutions"].as_array().unwrap();
    let reduction = sols
        .iter()
        .find(|s| s["family"] == "LogDerivativeReduction")
        .expect("linearised branch");
    assert_eq!(reduction["verification"]["mode"], "numeric");
    assert_eq!(reduction["verification"]["verified"], true);
}

#[test]
fn solve_reports_nothing_found() {
    let (doc, code) = json(&["solve", "--A", "1", "--B", "2", "--beta", "1", "--gamma", "1"]);
    assert_eq!(code, 1);
    assert!(doc["result"]["solutions"].as_array().unwrap().is_empty());
}

#[test]
fn solve_free_choice_parsing() {
    let (doc, _) = json(&["solve", "--A", "1", "--B", "2", "--gamma", "10", "--free", "b=3"]);
    let quad = doc["result"]["solutions"]
        .as_array()
        .unwrap()
        .iter()
        .find(|s| s["family"] == "Quadratic")
        .unwrap();
    assert_eq!(quad["params"]["a"], "5/4");
    assert_eq!(quad["params"]["b"], "3");
    assert_eq!(run(&["solve", "--free", "q=1"]).status.code(), Some(2));
}

#[test]
fn fs_lambda_catalog() {
    let (doc, code) = json(&["fs-lambda"]);
    assert_eq!(code, 0);
    let sorted = strings(&doc["result"]["sorted"]);
    for l in ["-2", "-11/2", "9", "38/7"] {
        assert!(sorted.iter().any(|s| s == l), "{l}");
    }
    let (doc, _) = json(&["fs-lambda", "--j-max", "6"]);
    let js: Vec<i64> = doc["result"]["family_iii"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["n"].as_i64().unwrap())
        .collect();
    assert_eq!(js, [0, 4, 5]);
    let (doc, _) = json(&["fs-lambda", "--r-min", "1", "--r-max", "3"]);
    let l: Vec<String> = doc["result"]["family_ii"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["lambda"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(l, ["0", "1/2", "2/3"]);
    assert_eq!(run(&["fs-lambda", "--r-min", "0", "--r-max", "0"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["solve", "--A", "1", "--B", "2", "--beta", "5", "--json"][..],
        &["solve", "--fs-lambda", "-1", "--json"][..],
        &["analyze", "--A", "3", "--B", "1", "--json"][..],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout);
    }
}
