use std::process::{Command, Output};

use serde_json::Value;

fn dmm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dmm")).args(args).output().expect("run dmm")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn satisfies_exit_codes() {
    let ok = dmm(&["satisfies", "--algebra", "D4", "--statement", "x /\\ ~x <= y"]);
    assert_eq!(code(&ok), 0, "{}", stdout(&ok));
    let fail = dmm(&["satisfies", "--algebra", "S3", "--statement", "x /\\ ~x <= y", "--format", "json"]);
    assert_eq!(code(&fail), 1);
    let v: Value = serde_json::from_str(&stdout(&fail)).unwrap();
    assert_eq!(v["results"][0]["holds"], false);
    assert!(v["results"][0]["counterexample"].is_object());
}

#[test]
fn statements_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("laws.txt");
    std::fs::write(&path, "x <= x \\/ y\nx * e = x\n").unwrap();
    let o = dmm(&["satisfies", "--algebra", "C4", "--statement", &format!("@{}", path.display())]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("holds")).count(), 2);
}

#[test]
fn usage_and_input_errors() {
    assert_eq!(code(&dmm(&["satisfies", "--algebra", "C4", "--statement", "x <="])), 2);
    assert_eq!(code(&dmm(&["validate", "--algebra", "no-such-algebra"])), 2);
    assert_eq!(code(&dmm(&["enumerate", "--size", "9"])), 2);
    assert_eq!(code(&dmm(&["frobnicate"])), 2);
    let o = dmm(&["satisfies", "--algebra", "C4", "--statement", "a * b * c * d <= x"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("variables"));
}

#[test]
fn analyze_reports_the_lollipop() {
    let o = dmm(&["analyze", "--algebra", "C4"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("lollipop:"));
    assert!(text.contains("interval {~f^2, e, f, f^2}"));
    assert!(text.contains("f^2[I]"));
    let o = dmm(&["analyze", "--algebra", "C4ext_2", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["checks"]["lollipop"]["violations"].as_array().unwrap().len(), 0);
    let lower = v["checks"]["lollipop"]["lower_chain"].as_array().unwrap();
    assert_eq!(lower.len(), 3);
}

#[test]
fn enumerate_writes_a_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cat3.json");
    let o = dmm(&["enumerate", "--class", "dmm", "--size", "3", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let cat = dmm_core::enumeration::read_catalog(&out).unwrap();
    assert_eq!(cat.algebras.len(), 1);
    assert!(cat.complete);
    let entry = format!("{}#0", out.display());
    let o = dmm(&["iso", "--algebra", &entry, "--target", "S3"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn json_output_is_stable() {
    let a = dmm(&["enumerate", "--class", "irl", "--size", "5", "--format", "json"]);
    let b = dmm(&["enumerate", "--class", "irl", "--size", "5", "--format", "json", "--jobs", "1"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v[0]["catalog"]["count"], 21);
}

#[test]
fn named_algebras_win_over_files() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("C4"), "not json").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_dmm"))
        .current_dir(dir.path())
        .args(["validate", "--algebra", "C4"])
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
}

#[test]
fn validation_failures_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.json");
    let o = dmm(&["construct", "--algebra", "2", "--product", "S3", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let p = path.to_str().unwrap();
    assert_eq!(code(&dmm(&["validate", "--algebra", p])), 0);
    let o = dmm(&["classify", "--algebra", p, "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["fsi"], false);
    assert_eq!(code(&dmm(&["iso", "--algebra", "C4", "--target", "D4"])), 1);
    let o = dmm(&["satisfies", "--algebra", p, "--statement", "e <= x \\/ ~x"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn filters_quotients_and_homs() {
    let o = dmm(&["quotient", "--algebra", "S5", "--filter", "-1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("(3 elements)"));
    let o = dmm(&["dfg", "--algebra", "D4", "--elements", "f", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 4);
    let o = dmm(&["homs", "--algebra", "S4", "--target", "S3", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
}

#[test]
fn relevant_reducts() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ra.json");
    let p = path.to_str().unwrap();
    assert_eq!(code(&dmm(&["reduct", "--algebra", "D4", "--out", p])), 0);
    assert_eq!(code(&dmm(&["validate", "--class", "ra", "--algebra", p])), 0);
    let o = dmm(&["classify", "--class", "ra", "--algebra", p, "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["simple"], true);
    assert_eq!(v["agrees_with_dmm"], true);
}

#[test]
fn suite_passes() {
    let o = dmm(&["suite", "--size", "5", "--seed", "3"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("all checks passed"));
}
