use std::process::Command;

use cayley_circles::certifier::Certificate;
use cayley_circles::cli::{ClassifyReport, QuotientReport};
use cayley_circles::finite::FiniteReport;
use cayley_circles::legge::{DisconnectReport, LeggeReport};
use cayley_circles::outerplanar_check::OuterplanarReport;
use serde::de::DeserializeOwned;
use serde::Serialize;

fn run(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_cayley-circles"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    let output = cmd.output().unwrap();
    (
        output.status.code().unwrap(),
        String::from_utf8(output.stdout).unwrap(),
        String::from_utf8(output.stderr).unwrap(),
    )
}

/// Parses each JSON line and checks it prints back byte for byte.
fn round_trip<T: Serialize + DeserializeOwned>(line: &str) -> T {
    let value: T = serde_json::from_str(line).unwrap();
    assert_eq!(serde_json::to_string(&value).unwrap(), line);
    value
}

#[test]
fn certify_json_round_trips() {
    for (word, n, code) in [("aabb", "2", 0), ("abab", "2", 1), ("abABcc", "3", 0), ("aabbcc", "3", 0)] {
        let (status, out, _) = run(&["certify", "-n", n, word, "--json"], &[]);
        assert_eq!(status, code, "{word}");
        let cert: Certificate = round_trip(out.trim_end());
        assert_eq!(cert.verdict.exit_code(), code);
    }
}

#[test]
fn other_reports_round_trip() {
    let (_, out, _) = run(&["quotient", "-n", "2", "-s", "aabb", "-l", "3", "--json"], &[]);
    let q: QuotientReport = round_trip(out.trim_end());
    assert!(q.is_cycle);

    let (code, out, _) = run(&["classify", "-n", "3", "abABcc", "--json"], &[]);
    assert_eq!(code, 0);
    let c: ClassifyReport = round_trip(out.trim_end());
    assert_eq!(c.image.as_deref(), Some("aabbcc"));

    let (code, out, _) = run(&["legge", "-m", "3", "-n", "2", "-r", "3", "--disconnect", "--json"], &[]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    let report: LeggeReport = round_trip(lines.next().unwrap());
    assert!(report.pass);
    for line in lines {
        let cut: DisconnectReport = round_trip(line);
        assert!(cut.disconnected);
    }

    let (code, out, _) = run(&["finite", "cyclic:8:1,2", "--json"], &[]);
    assert_eq!(code, 1);
    let f: FiniteReport = round_trip(out.trim_end());
    assert!(f.hamiltonian_cycles >= 2);

    let (code, out, _) = run(&["outerplanar", "-n", "2", "abAB", "-l", "2", "--json"], &[]);
    assert_eq!(code, 0);
    let o: OuterplanarReport = round_trip(out.trim_end());
    assert_eq!(o.levels.len(), 2);
}

#[test]
fn output_is_deterministic() {
    let args = ["classify", "-n", "3", "abABcc", "--json"];
    assert_eq!(run(&args, &[]).1, run(&args, &[]).1);
}

#[test]
fn exit_code_contract() {
    assert_eq!(run(&["certify", "-n", "2", "aabb"], &[]).0, 0);
    assert_eq!(run(&["certify", "-n", "2", "abab"], &[]).0, 1);
    assert_eq!(run(&["certify", "-n", "2", "aXb"], &[]).0, 3);
    assert_eq!(run(&["certify", "-n", "2"], &[]).0, 3);
    assert_eq!(run(&["no-such-command"], &[]).0, 3);
    assert_eq!(run(&["--help"], &[]).0, 0);
}

#[test]
fn budget_env_and_flag_precedence() {
    let args = ["quotient", "-n", "2", "-s", "aabb", "-l", "3", "--enumerate"];
    let env = [("CAYLEY_CIRCLES_ENUM_BUDGET", "10")];
    let (code, _, err) = run(&args, &env);
    assert_eq!(code, 4, "{err}");
    let mut with_flag = args.to_vec();
    with_flag.extend(["--budget", "100000"]);
    assert_eq!(run(&with_flag, &env).0, 0);
}

#[test]
fn finite_accepts_edge_list_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.edges");
    std::fs::write(&path, "0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    let (code, out, _) = run(&["finite", path.to_str().unwrap()], &[]);
    assert_eq!(code, 0, "{out}");
    let dot = dir.path().join("q.dot");
    let (code, _, _) = run(&["quotient", "-n", "2", "-s", "abAB", "-l", "2", "--with-tree", "--dot", dot.to_str().unwrap()], &[]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("graph {") && text.contains("penwidth"));
}
