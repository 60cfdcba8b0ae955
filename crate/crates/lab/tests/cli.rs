use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn kfgm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kfgm")).args(args).output().expect("binary runs")
}

fn config(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

fn classify(bc: &str) -> Value {
    let dir = tempfile::tempdir().unwrap();
    let c = config(dir.path(), "c.json", &format!(r#"{{"bc": {bc}}}"#));
    let out = kfgm(&["classify", "--config", &c]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn classify_dirichlet() {
    let r = classify(r#""dirichlet""#);
    assert_eq!(r["named_match"], "dirichlet");
    assert_eq!(r["case"], "i");
    for flag in ["majorana_compatible", "confining", "tau1_condition", "energy_condition"] {
        assert_eq!(r[flag], true, "{flag}");
    }
    assert_eq!(r["confining_products"].as_array().unwrap().len(), 6);
}

#[test]
fn classify_robin() {
    let r = classify(r#""robin_mit_plus""#);
    assert_eq!(r["confining"], true);
    assert_eq!(r["tau1_condition"], false);
    assert_eq!(r["case"], "v");
}

#[test]
fn config_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = config(dir.path(), "bad.json", r#"{"bc": {"m0": 0.5, "m1": 0, "m2": 0, "m3": 0, "mu": 0}}"#);
    let unknown = config(dir.path(), "unknown.json", r#"{"bc": "sideways"}"#);
    for c in [&bad, &unknown] {
        let out = kfgm(&["classify", "--config", c]);
        assert_eq!(out.status.code(), Some(2));
        assert!(String::from_utf8_lossy(&out.stderr).contains("config error"));
    }
    assert_eq!(kfgm(&["classify", "--config", "/nonexistent/c.json"]).status.code(), Some(2));
    assert_eq!(kfgm(&["verify", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn verify_bc_algebra_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = kfgm(&["verify", "--suite", "bc_algebra", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let checks = v[0]["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["name"] == "four confining solutions" && c["passed"] == true));
    assert!(dir.path().join("verify_bc_algebra.json").exists());
}

#[test]
fn evolve_writes_identical_files_for_identical_configs() {
    let dir = tempfile::tempdir().unwrap();
    let body = r#"{"bc": "periodic", "grid": {"a": 0, "b": 1, "n": 24}, "initial": {"type": "random", "modes": 3},
        "evolution": {"dt": 0.005, "steps": 20, "record_every": 5}, "seed": 11}"#;
    let c = config(dir.path(), "c.json", body);
    let read = |sub: &str| {
        let out = dir.path().join(sub);
        let o = kfgm(&["evolve", "--config", &c, "--out", out.to_str().unwrap()]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        (fs::read(out.join("summary.csv")).unwrap(), fs::read(out.join("fields.csv")).unwrap())
    };
    let a = read("a");
    let b = read("b");
    assert_eq!(a, b);
    assert!(String::from_utf8_lossy(&a.0).starts_with("# config_hash="));
}

#[test]
fn spectrum_and_enumeration() {
    let dir = tempfile::tempdir().unwrap();
    let c = config(dir.path(), "c.json", r#"{"bc": "robin_mit_minus", "grid": {"a": 0, "b": 1, "n": 32}}"#);
    let out = dir.path().to_str().unwrap();
    assert!(kfgm(&["spectrum", "--config", &c, "--out", out]).status.success());
    let s = fs::read_to_string(dir.path().join("spectrum.csv")).unwrap();
    assert!(s.contains("# spectral_diagnostics=1"));
    assert!(s.lines().nth(3).unwrap().ends_with(",NaN"));

    let o = kfgm(&["enumerate-confining", "--samples", "10000", "--tol", "1e-6"]);
    assert!(o.status.success());
    assert_eq!(String::from_utf8_lossy(&o.stdout).lines().filter(|l| l.starts_with("confining,")).count(), 4);
    assert_eq!(kfgm(&["enumerate-confining", "--samples", "10"]).status.code(), Some(1));
}
