use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use equimon::catmon::{nerve_of_monoid, FiniteMonoid};
use equimon::formats::{BissetFile, MonoidFile, SsetFile};
use equimon::sset::BisimplicialSet;
use serde_json::Value;
use tempfile::TempDir;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equimon")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = run(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON report")
}

fn failure(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    let code = out.status.code().expect("exit code");
    assert!(out.stdout.is_empty());
    (code, serde_json::from_slice(&out.stderr).expect("structured error"))
}

fn write(dir: &TempDir, name: &str, value: &impl serde::Serialize) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, serde_json::to_string(value).unwrap()).unwrap();
    path.to_str().unwrap().to_string()
}

fn path(name: &str) -> String {
    data(name).to_str().unwrap().to_string()
}

#[test]
fn classify_z2() {
    let r = json(&["classify", &path("z2.json"), "--max-degree", "3"]);
    assert_eq!(r["summary"], "(Z; Z/2; 0; Z/2)");
    assert_eq!(r["homology"][1]["torsion"][0], "2");
    assert_eq!(r["homology"][3]["betti"], 0);
}

#[test]
fn classify_z3() {
    let r = json(&["classify", &path("z3.json"), "--max-degree", "2"]);
    assert_eq!(r["summary"], "(Z; Z/3; 0)");
}

#[test]
fn orbit_category_of_z2() {
    let r = json(&["orbit-cat", &path("z2.json")]);
    assert_eq!(r["hom_counts"], serde_json::json!([2, 1, 0, 1]));
    assert_eq!(r["verdict"], "PASS");
}

#[test]
fn orbit_category_of_klein() {
    let r = json(&["orbit-cat", &path("klein.json")]);
    assert_eq!(r["subgroups"].as_array().unwrap().len(), 5);
    assert_eq!(r["verdict"], "PASS");
}

#[test]
fn mcduff_graphs() {
    let r = json(&["mcduff", &path("triangle.json")]);
    assert_eq!((r["rank"].as_u64(), r["betti_1"].as_u64()), (Some(1), Some(1)));
    assert_eq!(r["verdict"], "PASS");
    let r = json(&["mcduff", &path("theta.json")]);
    assert_eq!((r["rank"].as_u64(), r["betti_1"].as_u64()), (Some(2), Some(2)));
    assert_eq!(r["presentation"]["generators"].as_array().unwrap().len(), 5);
}

#[test]
fn homology_of_circle() {
    let r = json(&["homology", &path("circle.json"), "--max-degree", "1"]);
    assert_eq!(r["summary"], "(Z; Z)");
}

#[test]
fn semigroupoid_splits() {
    let r = json(&["semigroupoid", &path("z2_chaotic2.json"), "--base", "x"]);
    assert_eq!(r["verdict"], "PASS");
    assert_eq!(r["monoid"]["elements"].as_array().unwrap().len(), 2);
    assert_eq!(r["homology_category"], r["homology_monoid"]);
    let (code, err) = failure(&["semigroupoid", &path("z2_chaotic2.json"), "--base", "w"]);
    assert_eq!(code, 2);
    assert_eq!(err["error"]["kind"], "unknown_name");
}

#[test]
fn wreath_of_swap() {
    let r = json(&["wreath", &path("wreath_swap.json")]);
    assert_eq!(r["order"], 8);
    assert_eq!(r["monoid"]["identity"], "(e,(e,e))");
}

#[test]
fn fixed_points_of_swap() {
    let r = json(&["fixed", &path("swap.json"), "--all"]);
    assert_eq!(r["verdict"], "PASS");
    assert_eq!(r["comparisons"].as_array().unwrap().len(), 2);
    assert_eq!(r["comparisons"][1]["fixed_elements"], serde_json::json!(["(e,e)", "(a,a)"]));
    let r = json(&["fixed", &path("swap.json"), "--subgroup", "e,a"]);
    assert_eq!(r["comparisons"].as_array().unwrap().len(), 1);
    let (code, err) = failure(&["fixed", &path("swap.json"), "--subgroup", "a"]);
    assert_eq!(code, 2);
    assert_eq!(err["error"]["kind"], "not_a_subgroup");
}

#[test]
fn naturality_of_swap() {
    let r = json(&["naturality", &path("swap.json")]);
    assert_eq!(r["verdict"], "PASS");
    assert_eq!(r["squares"], 4);
}

#[test]
fn ez_check_and_truncation() {
    let dir = TempDir::new().unwrap();
    let z2 = nerve_of_monoid(&FiniteMonoid::cyclic(2), 3);
    let z3 = nerve_of_monoid(&FiniteMonoid::cyclic(3), 3);
    let b = write(&dir, "b.json", &BissetFile::from_bisset(&BisimplicialSet::external_product(&z2, &z3)));
    let r = json(&["ez-check", &b, "--max-degree", "2"]);
    assert_eq!(r["verdict"], "PASS");
    assert_eq!(r["diagonal"], r["total"]);
    let (code, err) = failure(&["ez-check", &b, "--max-degree", "3"]);
    assert_eq!(code, 3);
    assert_eq!(err["error"]["kind"], "cutoff_too_small");
}

#[test]
fn normalize_circle_point() {
    let r = json(&["normalize-point", &path("circle.json"), "--point", &path("point.json")]);
    assert_eq!(r["canonical"]["label"], "e");
    assert_eq!(r["canonical"]["coords"], serde_json::json!(["1/3", "2/3"]));
}

#[test]
fn point_round_trip_through_the_cli() {
    let dir = TempDir::new().unwrap();
    let x = write(&dir, "x.json", &SsetFile::from_sset(&nerve_of_monoid(&FiniteMonoid::cyclic(3), 2)));
    let p = write(&dir, "p.json", &serde_json::json!({"level": 2, "simplex": "[a,a^2]", "coords": ["1/7", "2/7", "4/7"]}));
    let r = json(&["normalize-point", &x, "--point", &p]);
    assert_eq!(r["canonical"]["coords"], serde_json::json!(["1/7", "2/7", "4/7"]));
    let again = write(&dir, "q.json", &r["canonical"]);
    assert_eq!(json(&["normalize-point", &x, "--point", &again])["canonical"], r["canonical"]);
}

#[test]
fn reports_are_deterministic() {
    for args in [vec!["fixed", "swap.json", "--all"], vec!["orbit-cat", "klein.json"], vec!["classify", "z3.json", "--max-degree", "3"]] {
        let mut args: Vec<String> = args.into_iter().map(String::from).collect();
        args[1] = path(&args[1]);
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let mut with_json = vec!["--json"];
        with_json.extend(&refs);
        assert_eq!(run(&with_json).stdout, run(&with_json).stdout);
        assert_eq!(run(&refs).stdout, run(&refs).stdout);
    }
}

#[test]
fn usage_errors_exit_one() {
    let (code, err) = failure(&["classify"]);
    assert_eq!(code, 1);
    assert_eq!(err["error"]["kind"], "usage");
    assert_eq!(failure(&["frobnicate"]).0, 1);
    assert_eq!(failure(&["fixed", &path("swap.json")]).0, 1);
    assert_eq!(failure(&["classify", "/nonexistent/monoid.json", "--max-degree", "1"]).0, 1);
}

#[test]
fn validation_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let junk = dir.path().join("junk.json");
    std::fs::write(&junk, "{not json").unwrap();
    let (code, err) = failure(&["classify", junk.to_str().unwrap(), "--max-degree", "1"]);
    assert_eq!(code, 2);
    assert_eq!(err["error"]["kind"], "malformed_input");

    let bad = MonoidFile {
        elements: vec!["e".into(), "a".into(), "b".into()],
        identity: "e".into(),
        table: vec![vec!["e".into(), "a".into(), "b".into()], vec!["a".into(), "b".into(), "a".into()], vec!["b".into(), "e".into(), "b".into()]],
    };
    let (code, err) = failure(&["classify", &write(&dir, "bad.json", &bad), "--max-degree", "1"]);
    assert_eq!(code, 2);
    assert_eq!(err["error"]["kind"], "invalid_monoid");
    assert!(err["error"]["message"].as_str().unwrap().contains("(a·a)·a"));

    let (code, err) = failure(&["orbit-cat", &write(&dir, "m.json", &MonoidFile::from_monoid(&FiniteMonoid::enumerate_all(2)[1]))]);
    assert_eq!(code, 2);
    assert_eq!(err["error"]["kind"], "not_a_group");

    let (code, err) = failure(&["mcduff", &path("z2.json")]);
    assert_eq!(code, 2);
    assert_eq!(err["error"]["kind"], "malformed_input");
}

#[test]
fn truncation_errors_exit_three() {
    let (code, err) = failure(&["homology", &path("circle.json"), "--max-degree", "2"]);
    assert_eq!(code, 3);
    assert_eq!(err["error"]["kind"], "cutoff_too_small");
    assert_eq!(failure(&["naturality", &path("swap.json"), "--cutoff", "0"]).0, 3);
}

#[test]
fn text_reports() {
    let out = run(&["classify", &path("z2.json"), "--max-degree", "3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("H_3 = Z/2"));
    assert!(text.trim_end().ends_with("(Z; Z/2; 0; Z/2)"));
    let out = run(&["mcduff", &path("triangle.json")]);
    assert!(String::from_utf8(out.stdout).unwrap().trim_end().ends_with("PASS"));
}
