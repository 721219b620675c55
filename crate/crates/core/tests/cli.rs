use std::path::Path;
use std::process::{Command, Output};

fn bin(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sphefaffian")).current_dir(dir).args(args).output().expect("binary runs")
}

fn data_rows(text: &str) -> Vec<&str> {
    text.lines().filter(|l| !l.starts_with('#')).skip(1).collect()
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(bin(dir.path(), &["--help"]).status.code(), Some(0));
    assert_eq!(bin(dir.path(), &["frobnicate"]).status.code(), Some(2));
    assert_eq!(bin(dir.path(), &["sample", "--N", "4", "--n", "3", "--L", "1"]).status.code(), Some(2));
    assert_eq!(bin(dir.path(), &["sample", "--N", "4", "--n", "6.5", "--L", "1"]).status.code(), Some(2));
    assert_eq!(bin(dir.path(), &["check", "cdi", "--N", "3", "--n", "6", "--L", "1", "--tol", "1e-30"]).status.code(), Some(4));
    let out = bin(dir.path(), &["sample", "--N", "3", "--n", "5", "--L", "1", "--out", "missing/dir/x"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_error_points_to_help() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin(dir.path(), &["sample", "--N", "4"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("missing --n") && err.contains("sphefaffian help"), "{err}");
}

#[test]
fn sample_rows_and_reproducibility() {
    let dir = tempfile::tempdir().unwrap();
    let args =
        |out: &'static str| ["sample", "--N", "5", "--n", "8", "--L", "2", "--trials", "7", "--seed", "11", "--sphere", "--out", out];
    assert!(bin(dir.path(), &args("a")).status.success());
    assert!(bin(dir.path(), &args("b")).status.success());
    let a = std::fs::read_to_string(dir.path().join("a.csv")).unwrap();
    let b = std::fs::read_to_string(dir.path().join("b.csv")).unwrap();
    assert_eq!(a, b);
    let rows = data_rows(&a);
    assert_eq!(rows.len(), 35);
    assert_eq!(rows[0].split(',').count(), 5);
    let meta: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("a.json")).unwrap()).unwrap();
    assert_eq!(meta["seed"], 11);
    assert_eq!(meta["trials"], 7);
}

#[test]
fn kernel_table() {
    let dir = tempfile::tempdir().unwrap();
    let out =
        bin(dir.path(), &["kernel", "--N", "4", "--n", "6", "--L", "1", "--grid", "-0.5:0.5:0.5", "--w", "0.1,0.2", "--out", "k.csv"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(dir.path().join("k.csv")).unwrap();
    assert!(text.starts_with("# {"));
    let rows = data_rows(&text);
    assert_eq!(rows.len(), 9);
    for r in rows {
        let v: Vec<f64> = r.split(',').map(|x| x.parse().unwrap()).collect();
        assert!(v.iter().all(|x| x.is_finite()));
    }
    let out = bin(dir.path(), &["kernel", "--limit", "strong-bulk", "--grid", "0:0.5:0.5", "--w", "0,0", "--out", "lim.csv"]);
    assert!(out.status.success());
    assert_eq!(data_rows(&std::fs::read_to_string(dir.path().join("lim.csv")).unwrap()).len(), 4);
}

#[test]
fn kernel_compare_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin(
        dir.path(),
        &["kernel", "--compare", "--regime", "origin", "--L", "0", "--b", "1", "--N", "10,20", "--grid", "0:0.2:0.2", "--out", "cmp"],
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("cmp.json")).unwrap()).unwrap();
    assert_eq!(v["sup_errors"].as_array().unwrap().len(), 2);
    assert_eq!(v["monotone"], true);
}

#[test]
fn check_commands_pass() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [&[&str]; 5] = [
        &["check", "cdi", "--N", "4", "--n", "7", "--L", "2.5"],
        &["check", "beta-form", "--N", "4", "--n", "7", "--L", "1"],
        &["check", "ode", "--variant", "weak", "--rho", "2"],
        &["check", "sop-equiv", "--N", "5", "--n", "8", "--L", "1"],
        &["check", "origin-forms", "--L", "1"],
    ];
    for args in cases {
        let out = bin(dir.path(), args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["pass"], true, "{args:?}");
    }
}

#[test]
fn constant_statistic_has_no_fluctuation() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin(dir.path(), &["linstat", "--N", "6", "--n", "12", "--L", "6", "--b", "const:3", "--trials", "20", "--seed", "2"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["mc_variance"].as_f64().unwrap(), 0.0);
    assert!((v["mc_mean"].as_f64().unwrap() - 18.0).abs() < 1e-12);
}

#[test]
fn characteristic_function_table() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin(
        dir.path(),
        &["linstat", "--N", "8", "--regime", "strong", "--a", "1", "--b-param", "1", "--charfn", "--k", "0:1:0.25", "--out", "cf.csv"],
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(dir.path().join("cf.csv")).unwrap();
    let rows = data_rows(&text);
    assert_eq!(rows.len(), 5);
    for r in rows {
        let v: Vec<f64> = r.split(',').map(|x| x.parse().unwrap()).collect();
        assert!(v[1].hypot(v[2]) <= 1.0 + 1e-12);
    }
}
