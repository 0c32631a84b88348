use std::fs;
use std::io::Write;
use std::process::{Command, Output, Stdio};

use tempfile::tempdir;

fn semlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semlab"))
        .args(args)
        .env_remove("SEMLAB_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

const TRIANGLE_CERT: &str = r#"{"vertex_labels":[1,2,3],"edge_labels":[[0,1,6],[1,2,4],[0,2,5]],"valence":9}"#;

#[test]
fn check_accepts_valid_certificate() {
    let dir = tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    fs::write(&cert, TRIANGLE_CERT).unwrap();
    let out = semlab(&["check", "--gen", "cycle", "3", "--cert", cert.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("valence 9"));
}

#[test]
fn check_rejects_swapped_edge_labels() {
    let dir = tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    fs::write(
        &cert,
        r#"{"vertex_labels":[1,2,3],"edge_labels":[[0,1,4],[1,2,6],[0,2,5]],"valence":9}"#,
    )
    .unwrap();
    let out = semlab(&["check", "--gen", "cycle", "3", "--cert", cert.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("non-constant valence"), "{}", stdout(&out));
}

#[test]
fn check_reports_malformed_certificate() {
    let dir = tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    fs::write(&cert, "{not json").unwrap();
    let out = semlab(&["check", "--gen", "cycle", "3", "--cert", cert.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("parse"), "{}", stderr(&out));
}

#[test]
fn solve_exit_codes() {
    assert_eq!(semlab(&["solve", "--gen", "cycle", "5"]).status.code(), Some(0));
    assert_eq!(semlab(&["solve", "--gen", "two-cycle", "3", "5"]).status.code(), Some(0));
    let out = semlab(&["solve", "--gen", "two-cycle", "3", "4", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["status"], "NOT_SEM_OBSTRUCTION");
    assert_eq!(json["obstruction"]["rule"], "DEGSEQ_4_2_EVEN_ORDER");
}

#[test]
fn solve_without_obstructions_exhausts() {
    let out = semlab(&["solve", "--gen", "cycle", "4", "--no-obstructions", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["status"], "NOT_SEM_EXHAUSTED");
}

#[test]
fn tiny_budget_is_unknown() {
    let out = semlab(&["solve", "--gen", "two-cycle", "4", "9", "--no-obstructions", "--budget", "10"]);
    assert_eq!(out.status.code(), Some(2), "{}", stdout(&out));
}

#[test]
fn interval_valences_perfect() {
    let out = semlab(&["interval", "--gen", "cycle", "3"]);
    assert!(stdout(&out).contains("[9, 9]"), "{}", stdout(&out));
    let out = semlab(&["interval", "--gen", "cycle", "4", "--json"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["interval"], serde_json::json!([12, 11]));
    assert_eq!(json["empty"], true);

    let out = semlab(&["valences", "--gen", "two-cycle", "3", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "valences: {19, 20}");

    assert_eq!(stdout(&semlab(&["perfect", "--gen", "two-cycle", "3", "5"])).trim(), "perfect");
    assert_eq!(stdout(&semlab(&["perfect", "--gen", "cycle", "4"])).trim(), "vacuous-not-sem");
}

#[test]
fn edgeless_graph_message() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("empty.txt");
    fs::write(&path, "3\n").unwrap();
    for cmd in ["interval", "valences", "perfect"] {
        let out = semlab(&[cmd, path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{cmd}: {}", stderr(&out));
        assert!(stdout(&out).contains("trivially super edge-magic, valence undefined"));
    }
}

#[test]
fn sweep_is_deterministic_across_threads() {
    let run = |threads: &str| {
        let out = semlab(&[
            "sweep",
            "--valences",
            "--threads",
            threads,
            "two-cycle-grid",
            "--m",
            "3..5",
            "--n",
            "3..6",
        ]);
        assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
        out.stdout
    };
    let one = run("1");
    assert_eq!(one, run("4"));
    let text = String::from_utf8(one).unwrap();
    assert!(text.starts_with("family,params,order,size,obstruction,status,interval,valence_set,nodes,millis\n"));
    assert!(text.contains("two-cycle,m=3;n=5,7,8,none,SEM,19..20,19;20,"), "{text}");
    assert!(text.contains("two-cycle,m=3;n=3,5,6,EVEN_DEG_Q_MOD4,NOT_SEM_OBSTRUCTION,"), "{text}");
    assert_eq!(text.lines().count(), 1 + 12);
}

#[test]
fn sweep_writes_file_and_respects_order_limit() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("out.csv");
    let out = semlab(&["sweep", "--out", path.to_str().unwrap(), "degseq-4-2", "--order", "6..8"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 1 + 6);
    let out = semlab(&["sweep", "--max-order", "10", "three-cycle-series", "--k", "3"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).contains("max-order"));
}

#[test]
fn solve_then_check_pipeline() {
    let dir = tempdir().unwrap();
    let cert = dir.path().join("c.json");
    let out = semlab(&["solve", "--gen", "two-cycle", "3", "5", "--cert-out", cert.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let out = semlab(&["check", "--gen", "two-cycle", "3", "5", "--cert", cert.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn render_dot() {
    let out = semlab(&["render", "--gen", "cycle", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("graph G {"));
    assert_eq!(stdout(&out).matches(" -- ").count(), 3);

    let dir = tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    fs::write(&cert, TRIANGLE_CERT).unwrap();
    let out = semlab(&["render", "--gen", "cycle", "3", "--cert", cert.to_str().unwrap()]);
    assert!(stdout(&out).contains("valence 9"));
    let out = semlab(&["render", "--gen", "cycle", "5", "--cert", cert.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).is_empty());
}

#[test]
fn thread_env_overrides_flag() {
    let out = Command::new(env!("CARGO_BIN_EXE_semlab"))
        .args(["solve", "--gen", "cycle", "7", "--threads", "3", "--json"])
        .env("SEMLAB_THREADS", "2")
        .output()
        .unwrap();
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["config"]["threads"], 2);
}

#[test]
fn graph6_and_file_inputs() {
    let out = semlab(&["solve", "--g6", "F{CKG", "--json"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["graph"]["order"], 7);
    assert_eq!(json["status"], "SEM");

    let dir = tempdir().unwrap();
    let path = dir.path().join("c5.g6");
    fs::write(&path, "Dhc\n").unwrap();
    assert_eq!(semlab(&["solve", path.to_str().unwrap()]).status.code(), Some(0));

    let path = dir.path().join("square.txt");
    fs::write(&path, "# a square\n4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    assert_eq!(semlab(&["solve", path.to_str().unwrap()]).status.code(), Some(1));

    fs::write(&path, "4\n0 1\n1 1\n").unwrap();
    let out = semlab(&["solve", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn graph_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_semlab"))
        .args(["interval", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"3\n0 1\n1 2\n2 0\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(stdout(&out).contains("[9, 9]"));
}

#[test]
fn usage_errors() {
    assert_eq!(semlab(&["solve"]).status.code(), Some(3));
    assert_eq!(semlab(&["frobnicate"]).status.code(), Some(4));
    assert_eq!(semlab(&["--help"]).status.code(), Some(0));
}
