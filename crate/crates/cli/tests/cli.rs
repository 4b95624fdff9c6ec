use std::process::{Command, Output};

use serde_json::Value;

fn morlicz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_morlicz")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn claim<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["claims"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == name)
        .unwrap_or_else(|| panic!("no claim `{name}`"))
}

#[test]
fn constants_example() {
    let r = json(&morlicz(&[
        "constants",
        "--n",
        "1",
        "--alpha",
        "0.5",
        "--lambda",
        "0",
        "--mu",
        "0.5",
        "--c0",
        "2",
        "--c1",
        "4",
        "--c2",
        "5",
    ]));
    let ledger = &claim(&r, "ledger")["value"];
    assert_eq!(ledger["c6"].as_f64(), Some(16.0));
    let c_h = ledger["c_h"].as_f64().unwrap();
    assert!((c_h - 4.0 / (2f64.sqrt() - 1.0)).abs() < 1e-10);
    assert!(!claim(&r, "ledger")["anchor"].as_str().unwrap().is_empty());
}

#[test]
fn check_example_two() {
    let args =
        ["check", "--example", "2", "--n", "1", "--alpha", "0.25", "--lambda", "0.5", "--p1", "1.3333", "--p2", "1.6"];
    let r = json(&morlicz(&args));
    for (name, divergent) in [("condition_1", false), ("condition_2", false), ("condition_3", true)] {
        let c = &claim(&r, name)["value"];
        assert_eq!(c["divergence_flag"].as_bool(), Some(divergent), "{name}: {c}");
    }
    assert_eq!(r["divergent"].as_bool(), Some(true));
    let mut strict = args.to_vec();
    strict.push("--strict");
    assert_eq!(morlicz(&strict).status.code(), Some(3));
}

#[test]
fn norm_of_unit_indicator() {
    let r = json(&morlicz(&["norm", "--f", "chi:t=1", "--phi", "power:p=2", "--lambda", "0", "--n", "1"]));
    let v = claim(&r, "norm")["value"]["value"].as_f64().unwrap();
    assert!((v - 2f64.sqrt()).abs() < 1e-5, "{v}");
    let closed = claim(&r, "closed_form")["value"].as_f64().unwrap();
    assert!((closed - 2f64.sqrt()).abs() < 1e-12);
}

#[test]
fn riesz_and_maximal_on_the_axis() {
    let r = json(&morlicz(&["riesz", "--f", "chi:t=1", "--n", "1", "--alpha", "0.5", "--x", "0,2"]));
    let vals = &claim(&r, "riesz_potential")["value"];
    assert!((vals[0]["value"].as_f64().unwrap() - 4.0).abs() < 1e-8);
    assert!((vals[1]["value"].as_f64().unwrap() - 2.0 * (3f64.sqrt() - 1.0)).abs() < 1e-8);
    let r = json(&morlicz(&["maximal", "--f", "chi:t=1", "--n", "1", "--x", "2"]));
    let v = claim(&r, "maximal_function")["value"][0]["value"].as_f64().unwrap();
    assert!((v - 1.0 / 3.0).abs() < 1e-8);
}

#[test]
fn divergent_potential_is_reported() {
    let args = ["riesz", "--f", "radpow:beta=0,t=inf", "--n", "1", "--alpha", "0.5"];
    let r = json(&morlicz(&args));
    assert_eq!(r["divergent"].as_bool(), Some(true));
    assert!(claim(&r, "riesz_potential")["value"][0]["value"].is_null());
    let mut strict = args.to_vec();
    strict.push("--strict");
    assert_eq!(morlicz(&strict).status.code(), Some(3));
}

#[test]
fn grammar_and_constraint_errors_exit_two() {
    let bad = morlicz(&["norm", "--f", "chi:r=1", "--phi", "power:p=2", "--n", "1"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("chi"));
    let bad = morlicz(&["norm", "--f", "chi:t=1", "--phi", "power:p=0.5", "--n", "1"]);
    assert_eq!(bad.status.code(), Some(2));
    assert_eq!(morlicz(&["constants", "--n", "1"]).status.code(), Some(2));
    assert_eq!(morlicz(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(morlicz(&["--help"]).status.code(), Some(0));
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.conf");
    std::fs::write(&cfg, "# unit indicator\nf = chi:t=1\nphi = power:p=2\nn = 1\nlambda = 0.5\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    let from_file = json(&morlicz(&["norm", "--config", cfg]));
    assert_eq!(from_file["params"]["lambda"].as_f64(), Some(0.5));
    let overridden = json(&morlicz(&["norm", "--config", cfg, "--lambda", "0"]));
    assert_eq!(overridden["params"]["lambda"].as_f64(), Some(0.0));
    let v = claim(&overridden, "norm")["value"]["value"].as_f64().unwrap();
    assert!((v - 2f64.sqrt()).abs() < 1e-5);

    let bad = dir.path().join("bad.conf");
    std::fs::write(&bad, "gamma = 1\n").unwrap();
    assert_eq!(morlicz(&["norm", "--config", bad.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn csv_output_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("curves.csv");
    let out = morlicz(&[
        "check",
        "--phi",
        "power:p=2",
        "--psi",
        "power:p=4",
        "--n",
        "1",
        "--alpha",
        "0.25",
        "--u-count",
        "8",
        "--r-count",
        "8",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("series,u,r,lhs,rhs,ratio"));
    let rows: Vec<&str> = lines.collect();
    assert!(rows.iter().any(|l| l.starts_with("condition_1,")));
    assert!(rows.iter().any(|l| l.starts_with("condition_3,")));
    assert!(rows.iter().all(|l| l.split(',').count() == 6));

    let out = morlicz(&["constants", "--n", "1", "--alpha", "0.5", "--c1", "1", "--c2", "1", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("claim,field,value\n"));
    assert!(text.contains("ledger,c6,"));
}

#[test]
fn embed_and_witness() {
    let r = json(&morlicz(&[
        "embed",
        "--phi",
        "power:p=2",
        "--lambda",
        "0.5",
        "--psi",
        "power:p=4",
        "--mu",
        "0",
        "--n",
        "1",
    ]));
    let e = &claim(&r, "embedding")["value"];
    assert_eq!(e["holds"].as_bool(), Some(true));
    assert!((e["a1"].as_f64().unwrap() - 1.0).abs() < 1e-3);
    assert!(e["measured_constant"].as_f64().unwrap() <= 2.0);

    let r = json(&morlicz(&[
        "witness",
        "--phi",
        "power:p=2",
        "--lambda",
        "0.5",
        "--n",
        "1",
        "--alpha",
        "0.5",
        "--psi",
        "power:p=2",
    ]));
    assert_eq!(claim(&r, "ratio_sequence_increasing")["value"].as_bool(), Some(true));
    let r = json(&morlicz(&["witness", "--phi", "power:p=2", "--lambda", "-0.5", "--n", "1"]));
    assert_eq!(claim(&r, "witness")["value"]["nontrivial"].as_bool(), Some(false));
}

#[test]
fn verify_is_reproducible() {
    let a = morlicz(&["verify", "--suite", "young", "--seed", "7"]);
    let b = morlicz(&["verify", "--suite", "young", "--seed", "7"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let r = json(&a);
    assert_eq!(claim(&r, "totals")["value"]["failed"].as_u64(), Some(0));
}
