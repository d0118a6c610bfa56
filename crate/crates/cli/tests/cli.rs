use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_latpoly"))
}

fn corpus() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("latpoly-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn hstar_of_triangle() {
    let out = run(&["hstar", corpus().join("triangle-t.txt").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["hstar"], serde_json::json!([1, 3]));
    assert_eq!(v["degree"], 1);
    assert_eq!(v["codegree"], 2);
    assert_eq!(v["nv"], 4);
}

#[test]
fn reads_standard_input() {
    let out = run_stdin(&["volume", "-"], "dim 3\n0 0 0\n1 0 0\n0 1 0\n1 1 2\n");
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains('2'));
}

#[test]
fn invalid_input_exits_two() {
    let out = run_stdin(&["hstar", "-"], "dim 2\n0 0\n1 0\n1 0\n0 1\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    let out = run_stdin(&["hstar", "-"], "dim 2\n0 0\n1 1\n2 2\n");
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["hstar", "/nonexistent/polytope.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bound_values() {
    let v = json(&run(&["bound", "1", "2"]));
    assert_eq!(v["theoremBound"], "12");
    assert_eq!(v["stabilizationIndex"], "11");
    let v = json(&run(&["bound", "2", "3"]));
    assert_eq!(v["theoremBound"], "120");
}

#[test]
fn toric_ideal_shape() {
    let out = run(&["toric-ideal", corpus().join("reeve.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["variables"].as_array().unwrap().len(), 5);
    let b = v["binomials"].as_array().unwrap();
    assert_eq!(b.len(), 1);
    assert_eq!(b[0]["degree"], 4);
    assert!(b[0]["plus"].is_object() && b[0]["minus"].is_object());
    assert_eq!(v["perDegreeCounts"]["4"], 1);
}

#[test]
fn pyramid_build_then_detect() {
    let out = run(&[
        "pyramid",
        "build",
        "-t",
        "2",
        corpus().join("unit-square.txt").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let built = String::from_utf8(out.stdout).unwrap();
    let dir = scratch("pyramid");
    let file = dir.join("p.json");
    std::fs::write(&file, &built).unwrap();
    let out = run(&["pyramid", "peel", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["multiplicity"], 2);
    let out = run(&["pyramid-algebraic", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let _ = std::fs::remove_dir_all(dir);
}

#[test]
fn classify_planar_volume_four() {
    let out = run(&["classify", "--dim", "2", "--volume", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let classes = json(&out);
    let linear = classes
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["degree"] == 1)
        .count();
    assert_eq!(linear, 4);
    let out = run(&["classify", "--dim", "4", "--volume", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_all_is_deterministic() {
    let dir = corpus();
    let args = [
        "verify-all",
        "--corpus",
        dir.to_str().unwrap(),
        "--seed",
        "42",
    ];
    let first = run(&args);
    assert_eq!(
        first.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&first.stderr)
    );
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(json(&first)["passed"], true);
}

#[test]
fn corrupted_golden_fails_verify_all() {
    let dir = scratch("golden");
    for entry in std::fs::read_dir(corpus()).unwrap() {
        let path = entry.unwrap().path();
        if path.is_file() {
            std::fs::copy(&path, dir.join(path.file_name().unwrap())).unwrap();
        }
    }
    std::fs::create_dir(dir.join("golden")).unwrap();
    let golden = std::fs::read_to_string(corpus().join("golden/hstar.json")).unwrap();
    let mut v: Value = serde_json::from_str(&golden).unwrap();
    v["triangle-t"] = serde_json::json!([1, 4]);
    std::fs::write(dir.join("golden/hstar.json"), v.to_string()).unwrap();

    let out = run(&["verify-all", "--corpus", dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let report = json(&out);
    assert_eq!(report["passed"], false);
    assert_eq!(report["suites"]["golden-hstar"]["passed"], false);
    let _ = std::fs::remove_dir_all(dir);
}
