use std::path::PathBuf;
use std::process::{Command, Output};

fn corpus(file: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(file).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coregroups")).args(args).env_remove("COREGROUPS_MAX_COSETS").output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn trefoil_arc_core() {
    let text = stdout(&["group", &corpus("trefoil.dgm"), "--kind", "ac"]);
    assert_eq!(text, "gens: g1 g2 g3\nrel: g2 g3^-1 g2 g1^-1\nrel: g1 g2^-1 g1 g3^-1\nrel: g3 g1^-1 g3 g2^-1\n");
}

#[test]
fn abelian_groups() {
    let trefoil = corpus("trefoil.dgm");
    assert_eq!(stdout(&["abelian", &trefoil, "--kind", "rrc"]), "Z^2 + Z/3 + Z/3\n");
    assert_eq!(stdout(&["abelian", &trefoil, "--kind", "ac"]), "Z + Z/3\n");
    assert_eq!(stdout(&["abelian", &trefoil, "--kind", "wirtinger"]), "Z\n");
    let json = stdout(&["--format", "json-lines", "abelian", &trefoil, "--kind", "rc"]);
    let v: serde_json::Value = serde_json::from_str(json.trim()).unwrap();
    assert_eq!(v["free_rank"], 2);
    assert_eq!(v["torsion"], serde_json::json!(["3"]));
}

#[test]
fn thickened_torus_quotients() {
    let d = corpus("thickened_torus.dgm");
    let quotient =
        stdout(&["abelian", &d, "--kind", "ac", "--boundary", "g2^-1 g1 g2 g3^-1", "--boundary", "g4 g3^-1"]);
    assert_eq!(quotient, "Z + Z/3\n");
    assert_eq!(stdout(&["abelian", &d, "--kind", "rc0", "--base", "R2"]), "Z + Z/3\n");
}

#[test]
fn coset_orders() {
    assert_eq!(stdout(&["order", &corpus("a5.pres")]), "60\n");
    assert_eq!(stdout(&["order", &corpus("a5_alt.pres")]), "60\n");
    let out = run(&["order", &corpus("wirtinger_torus3.pres"), "--max-cosets", "50"]);
    assert_eq!(out.status.code(), Some(1));
    let capped = Command::new(env!("CARGO_BIN_EXE_coregroups"))
        .args(["order", &corpus("a5.pres")])
        .env("COREGROUPS_MAX_COSETS", "10")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(1));
}

#[test]
fn hom_counts() {
    assert_eq!(stdout(&["homcount", &corpus("a5.pres"), "--target", "a5"]), "121\n");
    assert_eq!(stdout(&["homcount", &corpus("trefoil.dgm"), "--target", "s3", "--kind", "wirtinger"]), "12\n");
}

#[test]
fn core_pipeline() {
    let text = stdout(&["core", &corpus("wirtinger_torus3.pres"), "--split", "s1", "--simplify"]);
    assert_eq!(text, "gens: s1 s2'\nrel: s2'^-3\n");
}

#[test]
fn moves() {
    let trefoil = corpus("trefoil.dgm");
    let list = stdout(&["move", &trefoil, "--list"]);
    assert!(list.lines().count() > 10);
    let first = list.lines().next().unwrap();
    let after = stdout(&["move", &trefoil, "--spec", first]);
    assert_eq!(after.lines().filter(|l| l.starts_with("crossing")).count(), 4);
    assert_eq!(run(&["move", &trefoil, "--spec", "r1- 1"]).status.code(), Some(1));
}

#[test]
fn verify_passes_on_the_corpus() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").display().to_string();
    let text = stdout(&["verify", "--corpus", &dir]);
    assert!(!text.contains("FAIL") && !text.contains("UNEXPECTED"), "{text}");
    assert!(text.contains("free-split: 19 pass, 3 expected-fail"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["group", &corpus("trefoil.dgm"), "--kind", "xyz"]).status.code(), Some(2));
    assert_eq!(run(&["info", &corpus("trefoil.dgm"), "--unknown-flag"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn missing_input_exits_1() {
    let out = run(&["info", "/nonexistent/x.dgm"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "json-lines", "group", &corpus("figure8.dgm"), "--kind", "rrc"];
    assert_eq!(stdout(&args), stdout(&args));
}
