//! End-to-end checks of the command-line contract: subcommands, report
//! schemas, exit codes and byte-level determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hopfdepth"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn hopfdepth")
}

fn report(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("valid JSON");
    assert_eq!(v["tool"]["name"], "hopfdepth");
    assert!(v["inputs"][0]["sha256"].is_string());
    v["report"].clone()
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("hopfdepth-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn depth_subcommand_matches_contract() {
    let out = run(&[
        "depth",
        "--ambient",
        "double:S3",
        "--sub",
        "group-side",
        "--n-max",
        "3",
        "--format",
        "json",
    ]);
    let r = report(&out);
    assert_eq!(r["min_depth"], 3);
    assert_eq!(r["min_odd"], 3);
    assert_eq!(r["min_even"], 4);
    let table = r["table"].as_array().unwrap();
    assert_eq!(table[0]["n"], 0);
    assert_eq!(table[0]["odd"], false);
    assert!(table[0]["even_BA"].is_null());
    assert_eq!(table[1]["odd"], true);
    assert_eq!(table[1]["even_BA"], false);
    assert_eq!(table[1]["even_AB"], false);
    assert!(r["theorems"].as_array().unwrap().iter().any(|c| c["name"] == "normal_iff_depth_two[group-side]"));
}

#[test]
fn reports_are_byte_identical() {
    let a = run(&["depth", "--ambient", "heisenberg:C3", "--sub", "group-side"]);
    let b = run(&["depth", "--ambient", "heisenberg:C3", "--sub", "group-side"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    // and the fast path must not change a byte of the result
    let c = run(&[
        "depth",
        "--ambient",
        "heisenberg:C3",
        "--sub",
        "group-side",
        "--fast-prime",
        "--seed",
        "7",
    ]);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn centralizer_subcommand() {
    let out = run(&["centralizer", "--ambient", "double:S3", "--sub", "dual-side"]);
    let r = report(&out);
    assert_eq!(r["dim"], 18);
    assert_eq!(r["factored"]["center_first_dim"], 6);
    assert_eq!(r["factored"]["normal_core_dim"], 1);
    assert_eq!(r["factored"]["equals_computed"], false);
}

#[test]
fn normality_subcommand() {
    let out = run(&["normality", "--ambient", "double:Q8", "--sub", "dual-side"]);
    let r = report(&out);
    assert_eq!(r["normal"], true);
    let out = run(&["normality", "--ambient", "double:Q8", "--sub", "group-side"]);
    let r = report(&out);
    assert_eq!(r["normal"], false);
    assert!(r["witness"].is_object());
}

#[test]
fn validation_failures_exit_one() {
    // corrupt a Hopf JSON file: break the comultiplication of the generator
    let built = run(&["build", "--spec", "hopf:C2"]);
    let v: serde_json::Value = serde_json::from_slice(&built.stdout).unwrap();
    let mut hopf = v["report"].clone();
    hopf["comult"][1] = serde_json::json!(["0", "0", "1", "0"]);
    let path = tmp("bad-hopf.json");
    std::fs::write(&path, serde_json::to_vec(&hopf).unwrap()).unwrap();
    let out = run(&["check", "hopf", "--in", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("axiom"), "stderr: {stderr}");
    std::fs::remove_file(&path).ok();
}

#[test]
fn unsupported_similarity_exits_two() {
    // k[x]/(x²) inside itself: depth is undefined for the non-semisimple
    // similarity engine and must exit with code 2
    let zero = "0";
    let one = "1";
    let alg = serde_json::json!({
        "dim": 2,
        "unit": [one, zero],
        "mult": [[[one, zero], [zero, one]], [[zero, one], [zero, zero]]],
        "labels": ["1", "x"],
    });
    let amb = tmp("dual-numbers.json");
    std::fs::write(&amb, serde_json::to_vec(&alg).unwrap()).unwrap();
    let map = tmp("identity-map.json");
    std::fs::write(
        &map,
        serde_json::to_vec(&serde_json::json!({ "matrix": [[one, zero], [zero, one]] })).unwrap(),
    )
    .unwrap();
    let out = run(&[
        "depth",
        "--ambient",
        amb.to_str().unwrap(),
        "--sub",
        amb.to_str().unwrap(),
        "--map",
        map.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not semisimple"));
    std::fs::remove_file(&amb).ok();
    std::fs::remove_file(&map).ok();
}

#[test]
fn file_round_trip_through_build_and_depth() {
    // identity extension of kC2 fed through files: depth 1
    let built = run(&["build", "--spec", "hopf:C2"]);
    let v: serde_json::Value = serde_json::from_slice(&built.stdout).unwrap();
    let path = tmp("c2.json");
    std::fs::write(&path, serde_json::to_vec(&v["report"]).unwrap()).unwrap();
    let map = tmp("c2-id.json");
    std::fs::write(
        &map,
        serde_json::to_vec(&serde_json::json!({ "matrix": [["1", "0"], ["0", "1"]] })).unwrap(),
    )
    .unwrap();
    let out = run(&[
        "depth",
        "--ambient",
        path.to_str().unwrap(),
        "--sub",
        path.to_str().unwrap(),
        "--map",
        map.to_str().unwrap(),
    ]);
    let r = report(&out);
    assert_eq!(r["min_depth"], 1);
    std::fs::remove_file(&path).ok();
    std::fs::remove_file(&map).ok();
}

#[test]
fn group_and_text_format() {
    let out = run(&["group", "--builtin", "S3"]);
    let r = report(&out);
    assert_eq!(r["order"], 6);
    assert_eq!(r["table"][0][3], 3);
    let text = run(&["group", "--builtin", "S3", "--format", "text"]);
    let s = String::from_utf8_lossy(&text.stdout);
    assert!(s.contains("order: 6"));
    assert!(!s.trim_start().starts_with('{'));
}

#[test]
fn unknown_flags_are_rejected() {
    let out = bin().args(["depth", "--ambient", "double:S3", "--wat"]).output().unwrap();
    assert!(!out.status.success());
}
