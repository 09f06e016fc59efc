use std::path::Path;
use std::process::{Command, Output};

use hyperf::extremal::MadReport;
use hyperf::fcalc::{FReport, FValue};
use hyperf::hypercore::{degree_vector, io};
use hyperf::verify::VerifySuiteReport;

fn hyperf(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperf"))
        .args(args)
        .current_dir(dir)
        .env_remove("HYPERF_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn generate_then_brute_force() {
    let dir = tempfile::tempdir().unwrap();
    assert!(hyperf(&["gen", "complete", "--n", "4", "--r", "3", "-o", "h.hg"], dir.path()).status.success());
    let out = hyperf(&["f", "h.hg", "--p", "1", "--k", "1", "--method", "brute"], dir.path());
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().next(), Some("0"));
}

#[test]
fn mad_of_k5() {
    let dir = tempfile::tempdir().unwrap();
    hyperf(&["gen", "complete", "--n", "5", "--r", "2", "-o", "k5.hg"], dir.path());
    let out = hyperf(&["mad", "k5.hg"], dir.path());
    assert_eq!(stdout(&out).lines().next(), Some("4/1"));
    let json = hyperf(&["--json", "mad", "k5.hg"], dir.path());
    let rep: MadReport = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(rep.value.to_string(), "4/1");
    assert_eq!(rep.witness, vec![0, 1, 2, 3, 4]);
}

#[test]
fn orient_output_meets_bound() {
    let dir = tempfile::tempdir().unwrap();
    hyperf(&["gen", "random", "--n", "9", "--r", "3", "--m", "12", "-o", "h.hg"], dir.path());
    let out = hyperf(&["orient", "h.hg", "--max-outdeg", "2", "-o", "o.hg"], dir.path());
    assert!(out.status.success());
    let doc = io::read_file(&dir.path().join("o.hg")).unwrap();
    let io::Document::Oriented(d) = doc else { panic!("expected oriented file") };
    assert_eq!(d.base().edge_count(), 12);
    for v in 0..9 {
        assert!(degree_vector(&d, &[v]).unwrap().coords[0] <= 2);
    }
}

#[test]
fn per_vertex_budget_file() {
    let dir = tempfile::tempdir().unwrap();
    hyperf(&["gen", "complete", "--n", "3", "--r", "2", "-o", "k3.hg"], dir.path());
    std::fs::write(dir.path().join("b.txt"), "2 1 0\n").unwrap();
    let out = hyperf(&["orient", "k3.hg", "--budget-file", "b.txt"], dir.path());
    assert!(out.status.success());
    std::fs::write(dir.path().join("b.txt"), "0 0 2\n").unwrap();
    assert_eq!(hyperf(&["orient", "k3.hg", "--budget-file", "b.txt"], dir.path()).status.code(), Some(2));
}

#[test]
fn f_report_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    hyperf(&["gen", "mop-fan", "--n", "8", "-o", "fan.hg"], dir.path());
    let out = hyperf(&["--json", "f", "fan.hg", "--k", "1", "--method", "via-m"], dir.path());
    let rep: FReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rep.value, FValue::Exact(1));
    let again: FReport = serde_json::from_str(&serde_json::to_string(&rep).unwrap()).unwrap();
    assert_eq!(again, rep);
    let alias = hyperf(&["f", "fan.hg", "--k", "1", "--method", "thm8", "--quiet"], dir.path());
    assert_eq!(stdout(&alias).trim(), "1");
}

#[test]
fn verify_suite_succeeds() {
    let dir = tempfile::tempdir().unwrap();
    let out = hyperf(&["verify", "hakimi"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let json = hyperf(&["--json", "verify", "thm2"], dir.path());
    let rep: VerifySuiteReport = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!((rep.suite.as_str(), rep.failed), ("partition", 0));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.hg"), "hypergraph n=3 r=2\ne 0 5\n").unwrap();
    assert_eq!(hyperf(&["mad", "bad.hg"], dir.path()).status.code(), Some(1));
    assert_eq!(hyperf(&["mad", "missing.hg"], dir.path()).status.code(), Some(1));
    assert_eq!(hyperf(&["frobnicate"], dir.path()).status.code(), Some(1));
    hyperf(&["gen", "complete", "--n", "5", "--r", "2", "-o", "k5.hg"], dir.path());
    assert_eq!(hyperf(&["orient", "k5.hg", "--max-outdeg", "1"], dir.path()).status.code(), Some(2));
    assert_eq!(hyperf(&["--budget", "10", "chi-r", "k5.hg", "--p", "1"], dir.path()).status.code(), Some(3));
    assert_eq!(hyperf(&["pack", "--n", "10", "--r", "4", "--p", "2", "--k", "1"], dir.path()).status.code(), Some(2));
}
