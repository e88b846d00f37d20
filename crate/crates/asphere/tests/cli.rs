use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    p.display().to_string()
}

fn asphere(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_asphere")).args(args).env_remove("ASPHERE_MAX_COSETS").output().unwrap()
}

fn report(args: &[&str]) -> (i32, Value) {
    let out = asphere(args);
    let v: Value = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}{}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr)));
    (out.status.code().unwrap(), v)
}

#[test]
fn star_list_degree_two() {
    let out = asphere(&["star-list", "--degree", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "aB\ncc\ndd\n");
}

#[test]
fn star_list_json_and_limits() {
    let (code, v) = report(&["star-list", "--degree", "3", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"].as_array().unwrap().len(), 6);
    assert_eq!(asphere(&["star-list", "--degree", "0"]).status.code(), Some(1));
    assert_eq!(asphere(&["star-list", "--degree", "40"]).status.code(), Some(2));
}

#[test]
fn quotient_case_ii() {
    let (code, v) = report(&["lemma32", "--case", "ii", "--k", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["command"], "lemma32");
    let r = &v["result"];
    assert_eq!((r["order"].as_u64(), r["claimed"].as_u64(), r["match"].as_bool()), (Some(20), Some(20), Some(true)));
    let (_, v) = report(&["lemma32", "--case", "vi"]);
    assert_eq!(v["result"]["t_order"], 12);
    assert_eq!(asphere(&["lemma32", "--case", "xi"]).status.code(), Some(1));
    assert_eq!(asphere(&["lemma32", "--case", "ii"]).status.code(), Some(1));
}

#[test]
fn classify_open_case() {
    let (code, v) = report(&["classify", "--input", &fixture("e1.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["verdict"], "OpenCase");
    assert_eq!(v["result"]["exception"], "E1");
    assert_eq!(v["result"]["H"]["cyclic"], true);
}

#[test]
fn classify_verdicts() {
    let (_, v) = report(&["classify", "--input", &fixture("z5_a_i.json")]);
    assert_eq!(v["result"]["verdict"], "NotAspherical");
    assert!(v["result"]["witnesses"].as_array().unwrap().iter().any(|w| w["condition"] == "T2_i"));
    let (_, v) = report(&["classify", "--input", &fixture("infinite_cyclic.json")]);
    assert_eq!(v["result"]["verdict"], "Aspherical");
    assert_eq!(v["result"]["H"]["order"], "infinite");
}

#[test]
fn invalid_input_exits_one() {
    let out = asphere(&["classify", "--input", &fixture("trivial_g3.json")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    assert_eq!(asphere(&["classify", "--input", "/nonexistent.json"]).status.code(), Some(1));
}

#[test]
fn usage_errors() {
    assert_eq!(asphere(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(asphere(&[]).status.code(), Some(64));
    assert_eq!(asphere(&["classify"]).status.code(), Some(64));
    assert_eq!(asphere(&["--help"]).status.code(), Some(0));
    assert_eq!(asphere(&["--version"]).status.code(), Some(0));
}

#[test]
fn curvature_prints_rational() {
    let out = asphere(&["curvature", "--degrees", "4,4,4"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1/2\n");
    let out = asphere(&["curvature", "--degrees", "4,4,4,4"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "0\n");
    assert_eq!(asphere(&["curvature", "--degrees", "4,x"]).status.code(), Some(1));
}

#[test]
fn weights_check_verdicts() {
    let (code, v) = report(&["weights", "check", "--alpha", "1,1,0,0", "--instance", &fixture("z2_free.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["verdict"], "WeaklyAspherical");
    let (_, v) = report(&["weights", "check", "--alpha", "1,1,0,0", "--instance", &fixture("z3_c3.json")]);
    assert_eq!(v["result"]["verdict"], "Counterexample");
    assert_eq!(v["result"]["verified"], true);
    assert_eq!(v["result"]["cycle"]["weight"], "0");
    let bad = asphere(&["weights", "check", "--alpha", "2,2,1,0", "--instance", &fixture("z3_c3.json")]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn fp_order_and_coset_limit() {
    let (code, v) = report(&["fp", "order", "--file", &fixture("quotient_ii_k2.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["order"], 20);
    let (_, v) = report(&["fp", "order", "--file", &fixture("s3.json")]);
    assert_eq!(v["result"]["order"], 6);
    let out = Command::new(env!("CARGO_BIN_EXE_asphere"))
        .args(["fp", "order", "--file", &fixture("quotient_ii_k2.json")])
        .env("ASPHERE_MAX_COSETS", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(asphere(&["fp", "order", "--file", &fixture("quotient_ii_k2.json"), "--max-cosets", "5"]).status.code(), Some(2));
}

#[test]
fn sphere_generate_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let pic = dir.path().join("pic.json");
    let pic = pic.to_str().unwrap();
    let (code, v) = report(&["sphere", "generate", "--family", "a_i", "--n", "5", "--out", pic]);
    assert_eq!(code, 0);
    assert_eq!((v["result"]["vertices"].as_u64(), v["result"]["edges"].as_u64(), v["result"]["faces"].as_u64()), (Some(10), Some(20), Some(12)));
    let (code, v) = report(&["sphere", "verify", "--file", pic, "--instance", &fixture("z5_a_i.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["passed"], true);
    assert_eq!(v["result"]["curvature_total"], "4");
    let (_, v) = report(&["sphere", "verify", "--file", pic, "--instance", &fixture("z5_corrupt.json")]);
    assert_eq!(v["result"]["all_region_labels_trivial"], false);
    assert_eq!(asphere(&["sphere", "generate", "--family", "b_iii", "--n", "5"]).status.code(), Some(1));
}

#[test]
fn output_is_byte_stable() {
    let args = ["classify", "--input", &fixture("e1.json")];
    let (a, b) = (asphere(&args), asphere(&args));
    assert_eq!(a.stdout, b.stdout);
    let (_, v) = report(&args);
    assert!(v.get("timing").is_none());
    assert_eq!(v["input_digest"].as_str().unwrap().len(), 64);
    let (_, v) = report(&["classify", "--input", &fixture("e1.json"), "--timing"]);
    assert!(v["timing"]["elapsed_us"].is_u64());
}
