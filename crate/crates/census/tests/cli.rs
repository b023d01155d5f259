use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn census(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_census"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn graph_census() {
    let out = census(&["graph", "K5", "--quiet"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["dimensions"]["cycles"], 6);
    assert_eq!(v["counts"]["cycles"]["value"], "2^6");
    assert_eq!(v["counts"]["cycles"]["decimal"], "64");
    assert!(out.stderr.is_empty());
}

#[test]
fn deleted_square_census() {
    let v = json(&census(&["deleted-square", "K4"]));
    assert_eq!(v["dimensions"]["cycles"], 13);
    assert_eq!(v["dimensions"]["mod_boundaries"], 7);
}

#[test]
fn cells_and_hypergraph() {
    let v = json(&census(&["deleted-cells", "K3,3"]));
    assert_eq!(v["dimensions"]["two_cycles"], 1);
    let dir = std::env::temp_dir().join(format!("census-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join("tetra.txt");
    fs::write(&path, "V 4\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n").unwrap();
    let v = json(&census(&["hypergraph", path.to_str().unwrap()]));
    assert_eq!(v["betti"]["b2"], 1);
    let gpath = dir.join("g.txt");
    fs::write(&gpath, "V 3\n0 1\n1 2\n0 2\n").unwrap();
    let v = json(&census(&["square", &format!("@{}", gpath.display())]));
    assert_eq!(v["dimensions"]["mod_boundaries"], 2);
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_byte_stable() {
    let a = census(&["square", "K2,3", "--quiet"]).stdout;
    let b = census(&["square", "K2,3", "--quiet"]).stdout;
    assert_eq!(a, b);
}

#[test]
fn usage_errors_exit_two() {
    let out = census(&["graph", "Q7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert_eq!(census(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(census(&["decompose", "triangles", "4", "0-1"]).status.code(), Some(2));
}

#[test]
fn verify_single_criterion() {
    let out = census(&["verify", "square-homology"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("PASS  2 square-homology"));
}

#[test]
fn decompose_tetrahedra() {
    let v = json(&census(&["decompose", "tetrahedra", "5", "0,1,2", "0,1,3", "0,2,3", "1,2,3"]));
    assert_eq!(v["parts"].as_array().unwrap().len(), 4);
}
