use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn domlab(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_domlab")).env("DOMLAB_CACHE", cache).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_record_shape() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.jsonl");
    let out = domlab(&cache, &["--json", "compute", "path:6", "autonomous"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["value"], 4);
    assert_eq!(v["invariant"], "autonomous");
    assert_eq!(v["graph_spec"], "path:6");
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["outcome"], "ok");
    for field in ["canonical_hash", "certificate", "certificate_digest", "engine_version"] {
        assert!(v[field].as_str().is_some_and(|s| !s.is_empty()), "{field}");
    }
    assert!(v["wall_time_secs"].as_f64().unwrap() >= 0.0);

    let text = domlab(&cache, &["compute", "complete:9", "foolproof"]);
    assert_eq!(stdout(&text).lines().next(), Some("1"));
}

#[test]
fn cache_hits_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.jsonl");
    let args = ["--json", "compute", "cart(path:2,path:5)", "autonomous"];
    let first = stdout(&domlab(&cache, &args));
    let second = stdout(&domlab(&cache, &args));
    assert_eq!(first, second);
    assert_eq!(std::fs::read_to_string(&cache).unwrap().lines().count(), 1);

    // a corrupt line is skipped, not fatal
    std::fs::write(&cache, format!("{{broken\n{}", std::fs::read_to_string(&cache).unwrap())).unwrap();
    let third = domlab(&cache, &args);
    assert_eq!(third.status.code(), Some(0));
    assert_eq!(stdout(&third), first);
    assert!(String::from_utf8_lossy(&third.stderr).contains("corrupt"));

    // bypassing the cache recomputes the same value
    let fresh: Value = serde_json::from_str(stdout(&domlab(&cache, &["--no-cache", "--json", "compute", "cart(path:2,path:5)", "autonomous"])).trim()).unwrap();
    let cached: Value = serde_json::from_str(first.trim()).unwrap();
    assert_eq!(fresh["value"], cached["value"]);
    assert_eq!(fresh["certificate_digest"], cached["certificate_digest"]);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.jsonl");
    assert_eq!(domlab(&cache, &["compute", "nonsense:3", "gamma"]).status.code(), Some(2));
    assert_eq!(domlab(&cache, &["compute", "path:4", "bogus"]).status.code(), Some(2));
    assert_eq!(domlab(&cache, &["--cap", "10", "compute", "path:12", "autonomous"]).status.code(), Some(3));
    assert_eq!(domlab(&cache, &["realize", "1", "1", "3"]).status.code(), Some(2));
    assert_eq!(domlab(&cache, &["realize", "2", "3", "4"]).status.code(), Some(0));
    // a start inside an all-secure family has nothing to refute
    assert_eq!(domlab(&cache, &["refute", "path:4", "2", "a_2,a_3"]).status.code(), Some(1));
    assert_eq!(domlab(&cache, &["simulate", "path:4", "a_9"]).status.code(), Some(2));
}

#[test]
fn refute_house9() {
    let dir = tempfile::tempdir().unwrap();
    let out = domlab(&dir.path().join("c.jsonl"), &["--json", "refute", "house9", "3", "b_1,a_3,a_4"]);
    assert_eq!(out.status.code(), Some(0));
    let steps: Vec<Value> = stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(steps.last().unwrap()["verdict"], "failed");
    assert!(steps[..steps.len() - 1].iter().all(|s| s["verdict"] == "defended"));
}

#[test]
fn simulate_writes_trajectory() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.jsonl");
    let traj = dir.path().join("t.jsonl");
    let script = dir.path().join("attacks.txt");
    std::fs::write(&script, "b_2\nb_5\nb_2\nb_5\n").unwrap();
    let t = traj.to_str().unwrap();
    let adversary = format!("scripted:{}", script.display());
    let out = domlab(&cache, &["--json", "simulate", "house9", "b_1,a_3,a_4", "--trials", "50", "--adversary", &adversary, "--trajectory", t]);
    assert_eq!(out.status.code(), Some(0));
    let stats: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(stats["trials"], 50);
    let failures = stats["failures"].as_u64().unwrap();
    if failures > 0 {
        let last = std::fs::read_to_string(&traj).unwrap().lines().last().unwrap().to_string();
        assert_eq!(serde_json::from_str::<Value>(&last).unwrap()["verdict"], "failed");
    }
    let again = domlab(&cache, &["--json", "simulate", "house9", "b_1,a_3,a_4", "--trials", "50", "--adversary", &adversary]);
    assert_eq!(stdout(&again), stdout(&out));
}

#[test]
fn export_dot_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.jsonl");
    let dot = stdout(&domlab(&cache, &["export-dot", "cycle:4", "--highlight", "a_1,a_3"]));
    assert!(dot.starts_with("graph G {"));
    assert_eq!(dot.matches("--").count(), 4);
    let out = domlab(&cache, &["--json", "verify-paper", "--scope", "paths"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(report["failed"], 0);
}
