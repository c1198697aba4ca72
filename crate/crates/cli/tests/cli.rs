use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn hallmark(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hallmark"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn psl2_31_theorem_a_agrees() {
    let out = hallmark(&["check", "--theorem", "A", "--group", "catalog:psl2_31", "--pi", "3,5", "--no-timings"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], "hallmark-report/1");
    assert_eq!(v["results"][0]["agreement"], "agree");
    assert_eq!(v["results"][0]["criterion"]["status"], "holds");
    assert!(v.get("timings").is_none());
}

#[test]
fn j1_needs_extended() {
    let out = hallmark(&["check", "--theorem", "A", "--group", "catalog:j1", "--pi", "3,5"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--extended"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(hallmark(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(hallmark(&["check", "--theorem", "Z", "--group", "catalog:alt_5"]).status.code(), Some(2));
    assert_eq!(hallmark(&["check", "--theorem", "A", "--group", "catalog:alt_5", "--pi", "4"]).status.code(), Some(2));
    assert_eq!(hallmark(&["check", "--theorem", "A", "--group", "catalog:nope_2"]).status.code(), Some(2));
    assert_eq!(hallmark(&["lie-verify", "--family", "Sp", "--n", "2", "--q", "3", "--r", "5", "--s", "13"]).status.code(), Some(2));
}

#[test]
fn reports_are_deterministic() {
    for args in [
        &["check", "--theorem", "B", "--group", "catalog:sym_5", "--no-timings"][..],
        &["hall", "--group", "catalog:psl2_31", "--pi", "3,5", "--no-timings"],
        &["ct-blocks", "psl2_7", "-p", "2", "--no-timings"],
        &["lie-grid", "--no-timings"],
    ] {
        let a = hallmark(args);
        let b = hallmark(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn suite_agrees_and_is_deterministic() {
    let a = hallmark(&["suite", "--no-timings"]);
    assert_eq!(a.status.code(), Some(0));
    let v = json(&a);
    assert_eq!(v["summary"]["disagree"], 0);
    assert_eq!(v["summary"]["untested"], 0);
    assert!(v["summary"]["checks"].as_u64().unwrap() > 100);
    let b = hallmark(&["suite", "--no-timings"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn group_files_are_accepted() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, r#"{{"name": "A5", "degree": 5, "generators": [[2,3,4,5,1], [1,2,4,5,3]]}}"#).unwrap();
    let path = f.path().to_str().unwrap();
    let out = hallmark(&["hall", "--group", path, "--pi", "2,5", "--no-timings"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["results"]["outcome"], "proved-absent");

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    write!(bad, r#"{{"name": "x", "degree": 3, "generators": [[1,1,2]]}}"#).unwrap();
    let out = hallmark(&["classes", "--group", bad.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_analysis_matches_group() {
    let out = hallmark(&["ct-analyze", "psl2_31", "--pi", "3,5", "--theorem", "C", "--no-timings"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["results"]["criterion"]["status"], "holds");
    assert_eq!(v["results"]["agree"], true);

    let out = hallmark(&["ct-blocks", "a5", "-p", "5", "--no-timings"]);
    let v = json(&out);
    assert_eq!(v["results"]["degrees"], serde_json::json!([["1", "3", "3", "4"], ["5"]]));
}

#[test]
fn catalog_lists_extended_only_on_request() {
    let plain = json(&hallmark(&["catalog"]));
    let ext = json(&hallmark(&["catalog", "--extended"]));
    let n = plain["results"].as_array().unwrap().len();
    assert_eq!(ext["results"].as_array().unwrap().len(), n + 1);
}
