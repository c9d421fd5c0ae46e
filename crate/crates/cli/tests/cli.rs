use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn kit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_steenrod-kit")).args(args).env_remove("STEENROD_CACHE").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn diag_level_zero_on_the_two_simplex() {
    let o = kit(&["diag", "--n", "0", "--simplex", "0,1,2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "[0]⊗[0,1,2] + [0,1]⊗[1,2] + [0,1,2]⊗[2]\n");
}

#[test]
fn diag_level_one_on_the_two_simplex() {
    let o = kit(&["diag", "--n", "1", "--simplex", "0,1,2"]);
    assert_eq!(stdout(&o), "[0,1,2]⊗[0,1] + [0,1,2]⊗[1,2] - [0,2]⊗[0,1,2]\n");
}

#[test]
fn diag_json_lists_terms() {
    let o = kit(&["diag", "--n", "0", "--simplex", "0,1", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
    assert_eq!(v["terms"][0]["left"], serde_json::json!([0]));
}

#[test]
fn diag_rejects_requests_above_the_truncation() {
    let o = kit(&["diag", "--n", "0", "--simplex", "0,1,2,3", "--truncation", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn diag_rejects_unordered_vertices() {
    assert_eq!(kit(&["diag", "--n", "0", "--simplex", "2,1"]).status.code(), Some(2));
}

#[test]
fn diag_updates_the_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    assert!(kit(&["diag", "--n", "2", "--simplex", "0,1,2,3", "--cache", cache]).status.success());
    let text = fs::read_to_string(dir.path().join("xi-table.json")).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert!(!v["entries"].as_array().unwrap().is_empty());
    let again = kit(&["diag", "--n", "2", "--simplex", "0,1,2,3", "--cache", cache]);
    assert_eq!(stdout(&again), stdout(&kit(&["diag", "--n", "2", "--simplex", "0,1,2,3"])));
}

#[test]
fn cache_directory_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_steenrod-kit"))
        .args(["diag", "--n", "1", "--simplex", "0,1"])
        .env("STEENROD_CACHE", dir.path())
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(dir.path().join("xi-table.json").exists());
}

#[test]
fn diag_on_a_cell_of_an_input_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("triangle.json");
    fs::write(&path, r#"{"name":"triangle","kind":"delta","truncation_dim":3,"facets":[[0,1,2]]}"#).unwrap();
    let o = kit(&["diag", "--n", "0", "--cell", "1:0", "--input", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).matches('⊗').count(), 2);
}

#[test]
fn sq_on_the_projective_plane() {
    let o = kit(&["sq", "--corpus", "rp2_6", "--ring", "f2", "--i", "1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "Sq^1: H^0 -> H^1 [0]\nSq^1: H^1 -> H^2 [1]\n");
}

#[test]
fn sq_requires_the_field_with_two_elements() {
    let o = kit(&["sq", "--corpus", "rp2_6", "--ring", "q"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("f2"));
}

#[test]
fn homology_of_the_torus() {
    let o = kit(&["homology", "--corpus", "torus7", "--truncation", "3"]);
    assert_eq!(stdout(&o), "H_0 = Z\nH_1 = Z^2\nH_2 = Z\n");
}

#[test]
fn info_on_the_circle() {
    let o = kit(&["info", "--corpus", "circle3", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["degeneracy_free"], Value::Bool(true));
    assert_eq!(v["core"], serde_json::json!([3, 3]));
}

#[test]
fn info_on_the_counterexample() {
    let o = kit(&["info", "--corpus", "sphere2_min", "--truncation", "3"]);
    assert!(stdout(&o).contains("degeneracy-free: false"));
}

#[test]
fn corrupted_input_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, r#"{"name":"bad","kind":"delta","cells":[[[],[]],[[1,0]],[[0,0,0]]]}"#).unwrap();
    let o = kit(&["info", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("bad"));
}

#[test]
fn verify_only_filters_checks() {
    let o = kit(&["verify", "--only", "chain-map", "--only", "vanishing", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let names: Vec<&str> = v["results"].as_array().unwrap().iter().map(|r| r["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["chain-map", "vanishing"]);
}

#[test]
fn verify_top_sign_runs_only_that_check() {
    let o = kit(&["verify", "--only", "top-sign", "--max-k", "6", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["results"].as_array().unwrap().len(), 1);
    assert_eq!(o.status.code(), Some(if v["results"][0]["passed"] == Value::Bool(true) { 0 } else { 1 }));
}

#[test]
fn verify_reports_failures_with_exit_code_one() {
    let o = kit(&["verify", "--only", "golden-cup1-level"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("counterexample"));
}

#[test]
fn verify_unknown_check_is_an_input_error() {
    assert_eq!(kit(&["verify", "--only", "no-such-check"]).status.code(), Some(2));
}
