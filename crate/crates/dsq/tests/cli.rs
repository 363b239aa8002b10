use std::process::{Command, Output};

use dsq::search::SearchReport;
use dsq::suites::SuiteReport;

fn dsq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dsq")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn build_and_spectrum() {
    let o = dsq(&["build", "centipede:8"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "GhD@?_");

    let o = dsq(&["spectrum", "complete:3", "--matrix", "adjacency"]);
    assert!(o.status.success(), "{o:?}");
    assert_eq!(stdout(&o).trim(), "x^3 - 3x - 2");
}

#[test]
fn invariants_recover_centipede_degrees() {
    let o = dsq(&["invariants", "centipede:10"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("1 degree distribution(s)"), "{text}");
    assert!(text.contains("[0, 6, 0, 4, 0, 0]"), "{text}");
}

#[test]
fn verify_exit_codes_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("w7.json");
    let o = dsq(&["verify", "w7-table", "--json", json.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("PASS")).count(), 5);
    let report: SuiteReport = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert!(report.all_passed());

    assert_eq!(dsq(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(dsq(&["verify", "iso", "--t", "40"]).status.code(), Some(2));
    assert_eq!(dsq(&["search", "--class", "trees"]).status.code(), Some(2));
}

#[test]
fn search_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("s.json");
    let csv = dir.path().join("s.csv");
    let o = dsq(&[
        "search",
        "--class",
        "trees",
        "--n",
        "10..11",
        "--target",
        "centipede:10",
        "--workers",
        "2",
        "--json",
        json.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("341 graphs scanned"), "{}", stdout(&o));
    let report: SearchReport = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(report.scanned, 341);
    assert!(report.all_determined());
    let rows = std::fs::read_to_string(&csv).unwrap().lines().count();
    assert_eq!(rows, report.classes.len() + 1);
}
