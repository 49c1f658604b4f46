use std::process::{Command, Output};

use proptest::prelude::*;
use serde_json::Value;

use star_ricci::classifier::SCHEMA_VERSION;
use star_ricci::conditions::{classify_hopf, ConditionReport};
use star_ricci::models::{AmbientSpace, HopfModel, ModelKind};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_star-ricci")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(&[&["--format", "json"], args].concat());
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn check_reports_every_condition() {
    let v = json(&["check", "--space", "chh2", "--kind", "a11", "--radius", "1.0"]);
    assert_eq!(v["schema"], SCHEMA_VERSION);
    for key in ["vanishing", "semi_parallel", "pseudo_parallel", "xi_parallel"] {
        assert!(v[key]["holds"].is_boolean(), "{key}");
        assert!(v[key]["residual"].is_number(), "{key}");
    }
    let (a, l) = (v["model"]["alpha"].as_f64().unwrap(), v["model"]["lambda"].as_f64().unwrap());
    assert!((v["pseudo_parallel"]["L"].as_f64().unwrap() - (a * l - 1.0)).abs() < 1e-9);
}

#[test]
fn abstract_hopf_derives_nu() {
    let v = json(&["check", "--kind", "abstract-hopf", "--alpha", "2.8", "--lambda", "2", "--xi-lambda", "1"]);
    assert!((v["model"]["nu"].as_f64().unwrap() - 3.0).abs() < 1e-9);
    assert!((v["xi_parallel"]["residual"].as_f64().unwrap() - 3.0).abs() < 1e-9);
    assert_eq!(v["xi_parallel"]["holds"], false);
}

#[test]
fn solve_finds_vanishing_radius() {
    let v = json(&["solve", "--space", "chh2", "--kind", "a11"]);
    assert!((v["radius"].as_f64().unwrap() - 0.5f64.atanh()).abs() < 1e-9);
}

#[test]
fn domain_errors_exit_2() {
    for args in [
        &["check", "--kind", "a11", "--radius", "-1"][..],
        &["check", "--space", "cp2", "--kind", "a1", "--radius", "2"],
        &["check", "--space", "chh2", "--kind", "a1", "--radius", "0.5"],
        &["check", "--kind", "a0", "--radius", "0.5"],
        &["check", "--kind", "a11"],
        &["check", "--kind", "abstract-hopf", "--alpha", "0", "--lambda", "1", "--nu", "1"],
        &["solve", "--kind", "b"],
        &["solve", "--space", "cp2", "--kind", "a1"],
        &["scan", "--kind", "a11", "--start", "1", "--stop", "0.5"],
        &["scan", "--kind", "a11", "--start", "0.5", "--stop", "1", "-n", "1"],
        &["check", "--space", "moon", "--kind", "a0"],
        &["--epsilon", "0", "catalog"],
        &["frobnicate"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn scan_is_deterministic_and_ordered() {
    let args = ["scan", "--kind", "a11", "--start", "0.3", "--stop", "1.0", "-n", "50"];
    let a = run(&[&["--format", "json"], &args[..]].concat());
    let b = run(&[&["--format", "json"], &args[..]].concat());
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    let radii: Vec<f64> = v["points"].as_array().unwrap().iter().map(|p| p["radius"].as_f64().unwrap()).collect();
    assert_eq!(radii.len(), 50);
    assert!(radii.windows(2).all(|w| w[0] < w[1]));
    assert_eq!(v["roots"]["vanishing"].as_array().unwrap().len(), 1);
}

#[test]
fn catalog_lists_all_kinds() {
    let v = json(&["catalog"]);
    assert_eq!(v["kinds"].as_array().unwrap().len(), 7);
}

#[test]
fn verify_passes() {
    let out = run(&["--format", "json", "verify"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn report_json_round_trips(r in 0.01f64..4.0, kind in 0usize..3) {
        let kind = [ModelKind::A11, ModelKind::A12, ModelKind::BHyp][kind];
        let m = HopfModel::catalog(AmbientSpace::complex_hyperbolic(), kind, Some(r)).unwrap();
        let report = classify_hopf(&m);
        let text = serde_json::to_string(&report).unwrap();
        let back: ConditionReport = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back, &report.quantized());
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }
}
