use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn gins(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gins")).args(args).output().expect("binary runs")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn classify_p4() {
    let d = TempDir::new().unwrap();
    let p4 = write(&d, "p4.txt", "n 4\n1 2\n1 3\n3 4\n");
    let out = gins(&["classify", s(&p4)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["condition_v"], false);
    assert_eq!(v["condition_vi"], false);
    assert!(v["witness"].as_str().unwrap().starts_with("graph (a) at vertices"));
}

#[test]
fn edge_ideal_of_k22_has_one_gin() {
    let d = TempDir::new().unwrap();
    let k22 = write(&d, "k22.txt", "n 4\n1 3\n1 4\n2 3\n2 4\n");
    let rev = json(&gins(&["gin", s(&k22), "--ring", "poly", "--order", "revlex"]));
    let lex = json(&gins(&["gin", s(&k22), "--ring", "poly", "--order", "lex"]));
    assert_eq!(rev["gin"]["generators"], lex["gin"]["generators"]);
    assert_eq!(rev["certificate"]["accepted"], true);
}

#[test]
fn sweep_thm1_n4() {
    let out = gins(&["sweep", "thm1", "--n", "4", "--seed", "9"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["report"]["summary"]["classes"], 11);
    assert_eq!(v["report"]["pass"], true);
    assert_eq!(v["seed"], 9);
    let table = gins(&["sweep", "thm1", "--n", "4", "--format", "table"]);
    assert!(String::from_utf8_lossy(&table.stdout).contains("classes=11 PASS"));
}

#[test]
fn same_seed_same_bytes() {
    let d = TempDir::new().unwrap();
    let f = write(&d, "c.txt", "ring=poly n=4\nx1*x2\nx3*x4\n");
    for args in [vec!["gin", s(&f), "--order", "lex", "--seed", "12"], vec!["sweep", "thm2", "--n", "4", "--seed", "12"]] {
        let a = gins(&args);
        let b = gins(&args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn shift_and_witnesses() {
    let d = TempDir::new().unwrap();
    let f = write(&d, "rei.txt", "# three edges\nring=ext n=4\ne{1,2}\ne{1,3}\ne{3,4}\n");
    let v = json(&gins(&["shift", s(&f), "--order", "lex", "--pairs", "2,4"]));
    assert_eq!(v["result"]["generators"], serde_json::json!(["e{1,2}", "e{1,3}", "e{2,3}"]));
    let v = json(&gins(&["witnesses", s(&f), "--order", "lex", "--budget", "50"]));
    assert_eq!(v["search"]["witnesses"].as_array().unwrap().len(), 2);
    assert_eq!(v["distinct_in_degree_2"], true);
}

#[test]
fn profile_betti_and_complexes() {
    let out = gins(&["profile", "--closed", "2,3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["engine_bipartite"], serde_json::json!([4, 6, 6, 6, 6]));
    let d = TempDir::new().unwrap();
    let f = write(&d, "c.txt", "ring=poly n=4\nx1*x2\nx3*x4\n");
    let out = gins(&["betti", s(&f)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["pass"], true);
    let out = gins(&["shifted-complex", "--facets", "1,2,3;3,4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["shifted_face_counts"], serde_json::json!([1, 4, 4, 1, 0]));
}

#[test]
fn negative_test_is_the_only_char2_path() {
    let out = gins(&["negative-test"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["violated"], true);
    assert_eq!(gins(&["negative-test", "--field", "prime:2"]).status.code(), Some(0));
    assert_eq!(gins(&["negative-test", "--field", "rational"]).status.code(), Some(2));
    assert_eq!(gins(&["sweep", "thm1", "--n", "3", "--field", "prime:2"]).status.code(), Some(2));
}

#[test]
fn exit_codes() {
    let d = TempDir::new().unwrap();
    let p4 = write(&d, "p4.txt", "n 4\n1 2\n1 3\n3 4\n");
    let big = write(&d, "big.txt", "ring=ext n=13\ne{1,2}\ne{3,4}\n");
    let c = write(&d, "c.txt", "ring=poly n=4\nx1*x2\nx3*x4\n");
    assert_eq!(gins(&["gin", "/no/such/file"]).status.code(), Some(2));
    assert_eq!(gins(&["gin", s(&p4), "--order", "weight:1,2:lex"]).status.code(), Some(2));
    assert_eq!(gins(&["gin", s(&p4), "--field", "prime:4"]).status.code(), Some(2));
    // a three-element field is far from generic
    assert_eq!(gins(&["gin", s(&c), "--field", "prime:3"]).status.code(), Some(3));
    assert_eq!(gins(&["gin", s(&big)]).status.code(), Some(4));
    assert_eq!(gins(&["witnesses", s(&p4), "--budget", "1"]).status.code(), Some(1));
}
