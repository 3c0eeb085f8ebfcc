//! End-to-end runs of the `mutvis` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn mutvis(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mutvis"))
        .args(args)
        .env_remove("MUTVIS_TIMEOUT_SECS")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("mutvis-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn value_of(report: &Value, invariant: &str) -> u64 {
    report["results"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["invariant"] == invariant)
        .unwrap()["value"]
        .as_u64()
        .unwrap()
}

#[test]
fn compute_cycle() {
    let out = mutvis(&["compute", "--generate", "cycle:8", "--mu"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(value_of(&r, "mu"), 3);
    assert_eq!(r["results"].as_array().unwrap().len(), 1);
    assert_eq!(r["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(r["config"]["generate"], "cycle:8");
}

#[test]
fn compute_from_graph6_file() {
    let gen = mutvis(&["generate", "path:5"]);
    let file = scratch("p5.g6", std::str::from_utf8(&gen.stdout).unwrap());
    let out = mutvis(&[
        "compute",
        "--input",
        file.to_str().unwrap(),
        "--mu-i",
        "--alpha",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(value_of(&r, "mu_i"), 2);
    assert_eq!(value_of(&r, "alpha"), 3);
}

#[test]
fn compute_complete_and_all_invariants() {
    let out = mutvis(&["compute", "--generate", "complete:5", "--mu"]);
    assert_eq!(value_of(&json(&out), "mu"), 5);
    let out = mutvis(&["compute", "--generate", "petersen"]);
    let r = json(&out);
    assert_eq!(r["results"].as_array().unwrap().len(), 4);
    assert_eq!(value_of(&r, "alpha"), 4);
}

#[test]
fn compute_edge_list_and_formats() {
    let file = scratch("c4.txt", "# four-cycle\n4 4\n0 1\n1 2\n2 3\n3 0\n");
    let path = file.to_str().unwrap();
    let out = mutvis(&["compute", "--input", path, "--mu", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("invariant,value,status,witness"));
    assert!(text.lines().nth(1).unwrap().starts_with("mu,3,optimal,"));
    let out = mutvis(&["compute", "--input", path, "--alpha", "--format", "text"]);
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("alpha = 2 (optimal)"));
}

#[test]
fn compute_errors_have_distinct_messages() {
    let garbage = scratch("bad.g6", "~~~\n");
    let disconnected = scratch("two.txt", "4 2\n0 1\n2 3\n");
    let cases = [
        (
            vec!["compute", "--input", garbage.to_str().unwrap()],
            "parse",
        ),
        (
            vec!["compute", "--input", disconnected.to_str().unwrap()],
            "disconnected",
        ),
        (
            vec!["compute", "--generate", "complete:70", "--mu"],
            "limit",
        ),
        (vec!["compute", "--generate", "wheel:5"], "spec"),
        (
            vec!["compute", "--generate", "cycle:5", "--timeout", "0"],
            "timeout",
        ),
    ];
    let mut messages = Vec::new();
    for (args, needle) in cases {
        let out = mutvis(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(out.stdout.is_empty());
        let err = String::from_utf8(out.stderr).unwrap();
        assert!(err.to_lowercase().contains(needle), "{err}");
        messages.push(err);
    }
    messages.sort();
    messages.dedup();
    assert_eq!(messages.len(), 5);
}

#[test]
fn timeout_gives_exit_two() {
    let out = mutvis(&[
        "compute",
        "--generate",
        "grid:7,7",
        "--mu",
        "--timeout",
        "0.000001",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let r = json(&out);
    assert_eq!(r["complete"], false);
    assert_eq!(r["results"][0]["status"], "incomplete");
}

#[test]
fn timeout_default_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_mutvis"))
        .args(["compute", "--generate", "cycle:6", "--mu"])
        .env("MUTVIS_TIMEOUT_SECS", "7.5")
        .output()
        .unwrap();
    assert_eq!(json(&out)["config"]["timeout_secs"], 7.5);
}

#[test]
fn generate_families() {
    let out = mutvis(&["generate", "frog:6,3,2", "--format", "edgelist"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("9 9"));
    let out = mutvis(&[
        "generate",
        "cartesian:complete:3,complete:3",
        "--format",
        "edgelist",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("9 18"));
    let out = mutvis(&["generate", "nonsense"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn generate_round_trip_through_files() {
    let dir = std::env::temp_dir().join(format!("mutvis-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for (format, name) in [("graph6", "g.g6"), ("edgelist", "g.txt")] {
        let path = dir.join(name);
        let out = mutvis(&[
            "generate",
            "corona:cycle:4,path:2",
            "--format",
            format,
            "--output",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
        let via_file = json(&mutvis(&[
            "compute",
            "--input",
            path.to_str().unwrap(),
            "--mu",
        ]));
        let direct = json(&mutvis(&[
            "compute",
            "--generate",
            "corona:cycle:4,path:2",
            "--mu",
        ]));
        assert_eq!(via_file["graph"], direct["graph"]);
        assert_eq!(value_of(&via_file, "mu"), 8);
    }
}

#[test]
fn zarankiewicz_reports() {
    let r = json(&mutvis(&["z", "--m", "3", "--n", "3"]));
    assert_eq!(r["value"], 6);
    assert_eq!(r["witness"].as_array().unwrap().len(), 3);
    assert!(r["kst_upper"].as_f64().unwrap() > 6.0);
    assert!(r["erdos_window"].is_array());
    let r = json(&mutvis(&["z", "--m", "1", "--n", "5"]));
    assert_eq!(r["value"], 5);
    let r = json(&mutvis(&["z", "--m", "3", "--n", "3", "--crosscheck-mu"]));
    assert_eq!(r["crosscheck_mu"]["mu"], 6);
    assert_eq!(r["crosscheck_mu"]["equal"], true);
    let out = mutvis(&["z", "--m", "40", "--n", "40"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn check_claims() {
    let out = mutvis(&["check", "thm_mu3", "--max-n", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["reports"][0]["claim_id"], "thm_mu3");
    assert_eq!(r["reports"][0]["status"], "pass");

    let out = mutvis(&["check", "bogus_id"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(
        err.contains("bogus_id") && err.contains("lemma_hamming"),
        "{err}"
    );
}

#[test]
fn check_output_ignores_worker_count() {
    let run = |w: &str| {
        mutvis(&[
            "check",
            "lemma_delta",
            "eq2_trees",
            "lemma_isometric",
            "--max-n",
            "5",
            "--workers",
            w,
        ])
        .stdout
    };
    assert_eq!(run("1"), run("3"));
}
