use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn siegel(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_siegel"))
        .arg("--cache-dir")
        .arg(cache)
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn decompose_degree_two() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(&siegel(dir.path(), &["decompose", "--d", "2"]));
    let lambdas: Vec<Value> = v["slots"].as_array().unwrap().iter().map(|s| s["lambda"].clone()).collect();
    assert_eq!(
        lambdas,
        vec![
            serde_json::json!([12, 0]),
            serde_json::json!([10, 2]),
            serde_json::json!([8, 4]),
            serde_json::json!([6, 6])
        ]
    );
    assert_eq!(v["slots"][1]["weight"], serde_json::json!([8, 8]));
}

#[test]
fn zero_precision_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = siegel(dir.path(), &["seed", "--prec", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn malformed_pair_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let out = siegel(dir.path(), &["covariants", "--d", "2", "--lambda", "8;4"]);
    assert!(!out.status.success());
}

#[test]
fn seed_cache_is_reused_and_verified() {
    let dir = tempfile::tempdir().unwrap();
    let first = json(&siegel(dir.path(), &["seed", "--prec", "12"]));
    let names: Vec<&str> = first["artifacts"].as_array().unwrap().iter().map(|a| a["artifact"].as_str().unwrap()).collect();
    assert_eq!(names, ["chi5", "chi10", "chi63"]);
    for n in ["chi5", "chi10", "chi63"] {
        assert!(dir.path().join(format!("{n}_N12.json")).exists());
        assert!(dir.path().join(format!("{n}_N12.meta.json")).exists());
    }
    let payload = fs::read(dir.path().join("chi5_N12.json")).unwrap();

    let second = siegel(dir.path(), &["seed", "--prec", "12"]);
    assert_eq!(json(&second), first);
    assert_eq!(fs::read(dir.path().join("chi5_N12.json")).unwrap(), payload);

    // a lower precision is served by the existing entry
    let lower = json(&siegel(dir.path(), &["seed", "--prec", "8"]));
    assert_eq!(lower["artifacts"][0]["prec"], 12);

    let mut bad = payload.clone();
    let i = bad.iter().position(|b| b.is_ascii_digit()).unwrap();
    bad[i] = if bad[i] == b'9' { b'8' } else { bad[i] + 1 };
    fs::write(dir.path().join("chi5_N12.json"), bad).unwrap();
    let out = siegel(dir.path(), &["seed", "--prec", "12"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("checksum"));
}

#[test]
fn covariant_of_type_8_4() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(&siegel(dir.path(), &["covariants", "--d", "2", "--lambda", "8,4"]));
    let list = v.as_array().unwrap();
    assert_eq!(list.len(), 1);
    assert_eq!(list[0]["entries"].as_array().unwrap().len(), 5);
}

#[test]
fn degree_four_orders_table() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(&siegel(dir.path(), &["reproduce", "--table", "d4-orders", "--prec", "16"]));
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 11);
    let row = rows.iter().find(|r| r["lambda"] == serde_json::json!([18, 6])).unwrap();
    assert_eq!(row["orders"], serde_json::json!([0, 2, 3]));
}

#[test]
fn pretty_output_is_a_table() {
    let dir = tempfile::tempdir().unwrap();
    let out = siegel(dir.path(), &["--pretty", "decompose", "--d", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().nth(1).unwrap().starts_with("lambda"));
    assert!(text.contains("[18,0]"));
}
