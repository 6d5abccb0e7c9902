//! End-to-end tests of the binary: file formats, streaming output, exit
//! statuses, oracle checking, and the stats block.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

fn write_file(dir: &TempDir, name: &str, contents: &str) -> PathBuf {
    let path = dir.path().join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cutenum"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout_lines(out: &Output) -> Vec<String> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(str::to_owned)
        .collect()
}

const C4: &str = "4 4\n0 1\n1 2\n2 3\n3 0\n";
const STAR3: &str = "4 3\n0 1\n0 2\n0 3\n";

#[test]
fn node_multicut_on_c4() {
    let dir = TempDir::new().unwrap();
    let g = write_file(&dir, "g.txt", C4);
    let t = write_file(&dir, "t.txt", "0 2\n");
    let out = run(&[
        "--mode",
        "node-multicut",
        "--graph",
        g.to_str().unwrap(),
        "--terminals",
        t.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_lines(&out), vec!["1 3"]);
}

#[test]
fn edge_multiway_on_star() {
    let dir = TempDir::new().unwrap();
    let g = write_file(&dir, "g.txt", STAR3);
    let t = write_file(&dir, "t.txt", "1 2 3\n");
    let out = run(&[
        "--mode",
        "edge-multiway",
        "--graph",
        g.to_str().unwrap(),
        "--terminals",
        t.to_str().unwrap(),
        "--oracle-check",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 3);
    for line in &lines {
        assert_eq!(line.split_whitespace().count(), 4, "two edges per cut");
    }
}

#[test]
fn infeasible_instance_exits_2_with_no_output() {
    let dir = TempDir::new().unwrap();
    let g = write_file(&dir, "g.txt", "4 5\n0 1\n1 2\n2 3\n3 0\n0 2\n");
    let t = write_file(&dir, "t.txt", "0 2\n");
    let out = run(&[
        "--mode",
        "node-multicut",
        "--graph",
        g.to_str().unwrap(),
        "--terminals",
        t.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn parse_errors_exit_3() {
    let dir = TempDir::new().unwrap();
    let good_graph = write_file(&dir, "g.txt", C4);
    let bad_graph = write_file(&dir, "bad.txt", "4 4\n0 1\n1 2\n");
    let pair = write_file(&dir, "t.txt", "0 2\n");
    let self_pair = write_file(&dir, "self.txt", "0 0\n");
    let disconnected = write_file(&dir, "disc.txt", "4 2\n0 1\n2 3\n");
    let dup_terminals = write_file(&dir, "dup.txt", "0 2 0\n");

    let base = |g: &PathBuf, t: &PathBuf, mode: &str| {
        run(&[
            "--mode",
            mode,
            "--graph",
            g.to_str().unwrap(),
            "--terminals",
            t.to_str().unwrap(),
        ])
    };
    assert_eq!(
        base(&bad_graph, &pair, "node-multicut").status.code(),
        Some(3)
    );
    assert_eq!(
        base(&good_graph, &self_pair, "node-multicut").status.code(),
        Some(3)
    );
    assert_eq!(
        base(&disconnected, &pair, "node-multicut").status.code(),
        Some(3)
    );
    assert_eq!(
        base(&good_graph, &dup_terminals, "node-multiway")
            .status
            .code(),
        Some(3)
    );

    // Missing --graph outside steiner-check mode.
    let out = run(&[
        "--mode",
        "node-multicut",
        "--terminals",
        pair.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));

    // Unknown flags are parse errors too.
    let out = run(&["--mode", "node-multicut", "--bogus"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn limit_truncates_promptly() {
    let dir = TempDir::new().unwrap();
    let mut text = String::from("21 20\n");
    for v in 1..21 {
        text.push_str(&format!("{} {}\n", v - 1, v));
    }
    let g = write_file(&dir, "g.txt", &text);
    let t = write_file(&dir, "t.txt", "0 20\n");
    let out = run(&[
        "--mode",
        "node-multicut",
        "--graph",
        g.to_str().unwrap(),
        "--terminals",
        t.to_str().unwrap(),
        "--limit",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_lines(&out).len(), 2);
}

#[test]
fn json_output_is_valid() {
    let dir = TempDir::new().unwrap();
    let g = write_file(&dir, "g.txt", C4);
    let t = write_file(&dir, "t.txt", "0 2\n");
    let out = run(&[
        "--mode",
        "edge-multicut",
        "--graph",
        g.to_str().unwrap(),
        "--terminals",
        t.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("stdout is a JSON array");
    let arr = parsed.as_array().unwrap();
    assert_eq!(arr.len(), 4);
    assert!(arr.iter().all(|s| s.get("edges").is_some()));
}

#[test]
fn stats_block_on_stderr() {
    let dir = TempDir::new().unwrap();
    let g = write_file(&dir, "g.txt", C4);
    let t = write_file(&dir, "t.txt", "0 2\n");
    let out = run(&[
        "--mode",
        "node-multiway",
        "--graph",
        g.to_str().unwrap(),
        "--terminals",
        t.to_str().unwrap(),
        "--stats",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let stats: serde_json::Value =
        serde_json::from_slice(&out.stderr).expect("stderr is a JSON stats block");
    assert_eq!(stats["outputs"], 1);
    // One delta per output plus the preprocessing delta.
    assert_eq!(stats["deltas_ns"].as_array().unwrap().len(), 2);
    assert!(stats["primitive_ops"].as_u64().unwrap() > 0);
}

#[test]
fn oracle_check_passes_and_guard_trips() {
    let dir = TempDir::new().unwrap();
    let g = write_file(&dir, "g.txt", C4);
    let t = write_file(&dir, "t.txt", "0 2\n");
    let out = run(&[
        "--mode",
        "node-multicut",
        "--graph",
        g.to_str().unwrap(),
        "--terminals",
        t.to_str().unwrap(),
        "--oracle-check",
    ]);
    assert_eq!(out.status.code(), Some(0));

    let mut text = String::from("30 29\n");
    for v in 1..30 {
        text.push_str(&format!("{} {}\n", v - 1, v));
    }
    let big = write_file(&dir, "big.txt", &text);
    let t = write_file(&dir, "t2.txt", "0 29\n");
    let out = run(&[
        "--mode",
        "node-multicut",
        "--graph",
        big.to_str().unwrap(),
        "--terminals",
        t.to_str().unwrap(),
        "--oracle-check",
    ]);
    assert_eq!(out.status.code(), Some(5));
}

#[test]
fn steiner_check_mode() {
    let dir = TempDir::new().unwrap();
    let h = write_file(&dir, "h.txt", "3 2\n0 1\n1 2\n");
    let out = run(&[
        "--mode",
        "steiner-check",
        "--terminals",
        h.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_lines(&out), vec!["1", "0 2"]);

    let bad = write_file(&dir, "bad.txt", "3 1\n0\n");
    let out = run(&[
        "--mode",
        "steiner-check",
        "--terminals",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
}
