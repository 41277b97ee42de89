use std::process::{Command, Output};

use serde_json::Value;

fn neil(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_neil"))
        .args(args)
        .env_remove("NEIL_SEED")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn dist_closed_form_on_neil_parabola() {
    let out = neil(&["dist", "--m", "2", "--n", "3", "--lambda", "0.5,0", "--mu", "-0.5,0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!((v["value"].as_f64().unwrap() - 0.251314).abs() < 1e-6);
    assert_eq!(v["branch"], "SmallAlpha");
    assert_eq!(v["method"], "closed");
}

#[test]
fn not_coprime_is_a_usage_error() {
    let out = neil(&["dist", "--m", "2", "--n", "4", "--lambda", "0.5,0", "--mu", "0,0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not relatively prime"));
    assert!(out.stdout.is_empty());
}

#[test]
fn unknown_flag_and_bad_complex_are_usage_errors() {
    assert_eq!(
        neil(&["gapset", "--m", "3", "--n", "4", "--frob"]).status.code(),
        Some(2)
    );
    assert_eq!(
        neil(&["dist", "--m", "2", "--n", "3", "--lambda", "x", "--mu", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        neil(&["dist", "--m", "2", "--n", "3", "--lambda", "0.9,0.9", "--mu", "0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn gapset_listing() {
    let out = neil(&["gapset", "--m", "3", "--n", "4"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1 2 5 (frobenius 5)\n");
    let out = neil(&["gapset", "--m", "2", "--n", "7", "--format", "json"]);
    let v = json(&out);
    assert_eq!(v["gaps"], serde_json::json!([1, 3, 5]));
    assert_eq!(v["frobenius"], 5);
}

#[test]
fn oracle_output_carries_provenance() {
    let args = [
        "dist", "--m", "3", "--n", "4", "--lambda", "0.5,0", "--mu", "-0.3,0.2", "--starts", "4", "--seed", "11",
    ];
    let out = neil(&args);
    let v = json(&out);
    assert_eq!(v["method"], "oracle");
    assert_eq!(v["bound"], "lower");
    assert_eq!(v["seed"], 11);
    assert!(v["evaluations"].as_u64().unwrap() > 0);
    assert!(v["converged"].is_boolean());
    // identical argv gives identical bytes
    assert_eq!(out.stdout, neil(&args).stdout);
}

#[test]
fn seed_environment_variable_overrides_flag() {
    let out = Command::new(env!("CARGO_BIN_EXE_neil"))
        .args([
            "metric", "--m", "2", "--n", "5", "--lambda", "0.3,0.2", "--method", "oracle", "--starts", "2", "--seed",
            "1",
        ])
        .env("NEIL_SEED", "42")
        .output()
        .unwrap();
    assert_eq!(json(&out)["seed"], 42);
}

#[test]
fn both_method_reports_difference_and_discrepancy() {
    let out = neil(&[
        "gamma0", "--m", "2", "--n", "3", "--x1", "1,0", "--x2", "1,0", "--method", "both", "--starts", "8",
    ]);
    let v = json(&out);
    assert_eq!(v["closed"], 1.0);
    assert!((v["oracle"].as_f64().unwrap() - 1.25).abs() < 1e-6);
    assert!((v["difference"].as_f64().unwrap() + 0.25).abs() < 1e-6);
    assert_eq!(v["discrepancy"], true);
}

#[test]
fn gamma0_on_34_and_infinite_kobayashi_metric() {
    let v = json(&neil(&["gamma0", "--m", "3", "--n", "4", "--x1", "1", "--x2", "1"]));
    assert!((v["value"].as_f64().unwrap() - 1.112612).abs() < 1e-6);
    assert_eq!(v["branch"], "Middle");
    let v = json(&neil(&["kobayashi", "--m", "2", "--n", "3", "--x1", "1", "--x2", "1"]));
    assert_eq!(v["value"], "inf");
}

#[test]
fn inner_reports_branch() {
    let v = json(&neil(&[
        "inner", "--m", "2", "--n", "3", "--lambda", "0.5,0", "--mu", "-0.5,0",
    ]));
    assert_eq!(v["branch"], "ThroughOrigin");
    assert!((v["value"].as_f64().unwrap() - 0.510826).abs() < 1e-6);
}

#[test]
fn cross_commands() {
    let v = json(&neil(&["cross", "--p", "z:0.5,0", "--q", "w:0.5,0"]));
    assert!((v["value"].as_f64().unwrap() - 1.098612).abs() < 1e-6);
    let v = json(&neil(&[
        "cross",
        "--quantity",
        "gamma",
        "--p",
        "origin",
        "--x1",
        "1",
        "--x2",
        "1",
    ]));
    assert_eq!(v["value"], 2.0);
    let v = json(&neil(&[
        "cross",
        "--quantity",
        "kappa",
        "--p",
        "origin",
        "--x1",
        "1",
        "--x2",
        "1",
    ]));
    assert_eq!(v["value"], "inf");
    // a tangent vector off the axis is a computation failure
    let out = neil(&[
        "cross",
        "--quantity",
        "gamma",
        "--p",
        "z:0.5,0",
        "--x1",
        "1",
        "--x2",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn table_csv_layout() {
    let out = neil(&["table", "--m", "2", "--n", "3", "--grid", "5", "--mu", "0.2,0.1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains('\r'));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("lambda_re,lambda_im,value,branch"));
    let rows: Vec<&str> = lines.collect();
    assert!(!rows.is_empty());
    for row in rows {
        let cols: Vec<&str> = row.split(',').collect();
        assert_eq!(cols.len(), 4);
        let value = cols[2];
        let digits = value
            .trim_start_matches(['-', '0', '.'])
            .chars()
            .filter(|c| c.is_ascii_digit())
            .count();
        assert!(value == "0" || digits == 9, "{value}");
    }
}

#[test]
fn verify_single_suite_passes() {
    let out = neil(&["verify", "--suite", "cross"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["suites"][0]["suite"], "cross");
    assert_eq!(neil(&["verify", "--suite", "nope"]).status.code(), Some(2));
}
