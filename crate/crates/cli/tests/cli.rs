use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn strongedge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_strongedge")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn generated(dir: &TempDir, name: &str, args: &[&str]) -> PathBuf {
    let out = strongedge(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    write(dir, name, &String::from_utf8(out.stdout).unwrap())
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const K5: &str = "0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";

#[test]
fn analyze_subdivided_wheel() {
    let dir = TempDir::new().unwrap();
    let w5 = generated(&dir, "w5.txt", &["gen", "wheel", "5", "--subdivide", "1"]);
    let out = strongedge(&["analyze", s(&w5)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["delta"], 5);
    assert_eq!(v["girth"], 6);
    assert_eq!(v["planar"], true);
    assert_eq!(v["known_bound"], 16);
    assert!(v["input_hash"].as_str().unwrap().starts_with("sha256:"));
}

#[test]
fn colour_girth6_round_trips_through_verify() {
    let dir = TempDir::new().unwrap();
    let w5 = generated(&dir, "w5.txt", &["gen", "wheel", "5", "--subdivide", "1"]);
    let trace = dir.path().join("trace.json");
    let out = strongedge(&["colour", "--girth6", s(&w5), "--trace", s(&trace)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc = json(&out);
    assert_eq!(doc["report"]["verified"], true);
    assert!(doc["report"]["colours_used"].as_u64().unwrap() <= 16);
    let trace: Value = serde_json::from_str(&fs::read_to_string(&trace).unwrap()).unwrap();
    assert!(!trace["reductions"].as_array().unwrap().is_empty());

    let colouring = write(&dir, "colouring.json", &String::from_utf8(out.stdout).unwrap());
    let out = strongedge(&["verify", s(&w5), s(&colouring)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["valid"], true);
}

#[test]
fn colour_pipeline_reports_regime() {
    let dir = TempDir::new().unwrap();
    let g = generated(&dir, "tri.txt", &["gen", "random-planar-triangulation", "12", "--seed", "3"]);
    let out = strongedge(&["colour", "--pipeline", s(&g), "--budget", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc = json(&out);
    let p = &doc["pipeline"];
    assert!(p["regime"] == "class1" || p["regime"] == "vizing");
    let used = p["colours_used"].as_u64().unwrap();
    assert!(used <= p["classCount"].as_u64().unwrap() * p["maxC"].as_u64().unwrap());
    assert!(used <= p["bound_claimed"].as_u64().unwrap());
    let colouring = write(&dir, "c.json", &String::from_utf8(out.stdout).unwrap());
    assert_eq!(strongedge(&["verify", s(&g), s(&colouring)]).status.code(), Some(0));
}

#[test]
fn girth6_on_k5_is_a_precondition_error() {
    let dir = TempDir::new().unwrap();
    let k5 = write(&dir, "k5.txt", K5);
    let out = strongedge(&["colour", "--girth6", s(&k5)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not planar"));
    assert_eq!(strongedge(&["colour", "--pipeline", s(&k5)]).status.code(), Some(1));
}

#[test]
fn verify_rejects_a_broken_colouring() {
    let dir = TempDir::new().unwrap();
    let p4 = write(&dir, "p4.txt", "0 1\n1 2\n2 3\n");
    let bad = write(&dir, "bad.json", r#"{"palette": 3, "colours": {"0-1": 1, "1-2": 2, "2-3": 1}}"#);
    let out = strongedge(&["verify", s(&p4), s(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["valid"], false);
    assert_eq!(v["violations"][0]["kind"], "distance2-conflict");
    let good = write(&dir, "good.json", r#"{"palette": 3, "colours": {"0-1": 1, "2-1": 2, "2-3": 3}}"#);
    assert_eq!(strongedge(&["verify", s(&p4), s(&good)]).status.code(), Some(0));
}

#[test]
fn solve_exact_on_cycles() {
    let dir = TempDir::new().unwrap();
    for (n, chi) in [(5, 5), (6, 3), (7, 4)] {
        let c = generated(&dir, &format!("c{n}.txt"), &["gen", "cycle", &n.to_string()]);
        let out = strongedge(&["solve", "--exact", s(&c)]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(json(&out)["result"]["chi_s"], chi);
        let out = strongedge(&["solve", s(&c), "--k", &(chi - 1).to_string()]);
        assert_eq!(json(&out)["result"]["status"], "unsat");
        let solved = write(&dir, "solved.json", &String::from_utf8(strongedge(&["solve", s(&c)]).stdout).unwrap());
        assert_eq!(strongedge(&["verify", s(&c), s(&solved)]).status.code(), Some(0));
    }
}

#[test]
fn discharge_reports_conservation() {
    let dir = TempDir::new().unwrap();
    let w5 = generated(&dir, "w5.txt", &["gen", "wheel", "5", "--subdivide", "1"]);
    let out = strongedge(&["discharge", s(&w5)]);
    assert_eq!(out.status.code(), Some(0));
    let r = &json(&out)["report"];
    assert_eq!(r["initial_total"], "-12");
    assert_eq!(r["final_total"], "-12");
    assert_eq!(r["replay_ok"], true);
}

#[test]
fn gen_is_deterministic_and_validates() {
    let a = strongedge(&["gen", "random-planar-triangulation", "20", "--seed", "7", "--subdivide", "1"]);
    let b = strongedge(&["gen", "random-planar-triangulation", "20", "--seed", "7", "--subdivide", "1"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(strongedge(&["gen", "cycle", "2"]).status.code(), Some(1));
    assert_eq!(strongedge(&["gen", "no-such-family", "3"]).status.code(), Some(1));
    let dot = strongedge(&["gen", "hex-patch", "2", "2", "--format", "dot"]);
    assert!(String::from_utf8_lossy(&dot.stdout).starts_with("graph G {"));
}

#[test]
fn bench_emits_a_row_per_instance() {
    let out = Command::new(env!("CARGO_BIN_EXE_strongedge"))
        .args(["bench", "--count", "3", "--format", "json"])
        .env("STRONGEDGE_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let rows = json(&out);
    assert_eq!(rows.as_array().unwrap().len(), 9 + 3);
    assert!(rows.as_array().unwrap().iter().all(|r| r["ok"] == true));
}

#[test]
fn bad_input_and_usage_exit_1() {
    let dir = TempDir::new().unwrap();
    let junk = write(&dir, "junk.txt", "0 x\n");
    assert_eq!(strongedge(&["analyze", s(&junk)]).status.code(), Some(1));
    assert_eq!(strongedge(&["analyze", "/nonexistent/graph.txt"]).status.code(), Some(1));
    assert_eq!(strongedge(&["colour", s(&junk)]).status.code(), Some(1));
    assert_eq!(strongedge(&["--help"]).status.code(), Some(0));
}
