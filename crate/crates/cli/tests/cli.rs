use std::collections::BTreeMap;
use std::process::{Command, Output};

use serde_json::Value;

fn bernoulli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bernoulli"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn bern_json_agrees_across_methods() {
    let o = bernoulli(&[
        "bern",
        "--max",
        "10",
        "--formula",
        "all",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let records: Vec<Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(records.len(), 50);
    let mut by_index: BTreeMap<u64, Vec<(String, String)>> = BTreeMap::new();
    for rec in &records {
        by_index
            .entry(rec["index"].as_u64().unwrap())
            .or_default()
            .push((
                rec["method"].as_str().unwrap().to_string(),
                rec["value"].as_str().unwrap().to_string(),
            ));
    }
    for (index, entries) in &by_index {
        let first = &entries[0].1;
        assert!(
            entries.iter().all(|(_, v)| v == first),
            "B_{index}: {entries:?}"
        );
    }
    assert_eq!(by_index[&1][0].1, "-1/2");
    assert_eq!(by_index[&10][0].1, "5/66");
    assert_eq!(by_index[&11].len(), 2, "only eq1 and eq2 reach B_11");
}

#[test]
fn exit_codes() {
    assert_eq!(
        bernoulli(&["verify", "--max-r", "1"]).status.code(),
        Some(0)
    );
    assert_eq!(
        bernoulli(&["verify", "--max-r", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        bernoulli(&["bench", "--max-r", "3", "--reps", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        bernoulli(&["bern", "--max", "3", "--bogus"]).status.code(),
        Some(2)
    );
    assert_eq!(bernoulli(&["bern"]).status.code(), Some(2));
    assert_eq!(bernoulli(&[]).status.code(), Some(2));
    assert_eq!(
        bernoulli(&["polylog", "--order", "0", "--form", "eulerian"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        bernoulli(&["quadcheck", "--eq", "11", "--n", "5/4"])
            .status
            .code(),
        Some(2)
    );
    // A tolerance no double-precision quadrature can meet is a verification failure.
    assert_eq!(
        bernoulli(&["quadcheck", "--eq", "5", "--max-r", "1", "--tol", "1e-30"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn verify_reports_every_check() {
    let o = bernoulli(&["verify", "--max-r", "50"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().count() >= 11);
    assert!(text.lines().all(|l| l.starts_with("PASS")), "{text}");

    let o = bernoulli(&["verify", "--max-r", "5", "--format", "json"]);
    let checks: Vec<Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(checks.iter().all(|c| c["pass"] == true));
}

#[test]
fn tables_csv_and_json() {
    let o = bernoulli(&["tables", "--kind", "stirling", "--max", "4"]);
    let text = stdout(&o);
    assert!(text.starts_with("row,index,value\n1,1,1\n"));
    assert!(text.contains("\n4,2,7\n"));

    let o = bernoulli(&[
        "tables", "--kind", "eulerian", "--max", "5", "--format", "json",
    ]);
    let rows: Vec<Vec<String>> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rows[4], vec!["1", "26", "66", "26", "1"]);
}

#[test]
fn polylog_subcommand() {
    let o = bernoulli(&["polylog", "--order", "3", "--eval", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(
        text.contains("eulerian: (-x + 4x^2 - x^3)/(1+x)^4"),
        "{text}"
    );
    assert!(text.contains("forms equal: true"));
    assert!(text.contains("at x = 1: 1/8"), "{text}");
}

#[test]
fn quadcheck_json_suite() {
    let o = bernoulli(&[
        "quadcheck",
        "--eq",
        "all",
        "--max-r",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let reports: Vec<Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(reports.len(), 3 + 2 + 9);
    for rep in &reports {
        assert_eq!(rep["pass"], true);
        assert!(rep["abs_err"].as_f64().unwrap() <= rep["tolerance"].as_f64().unwrap());
    }
    let eq11: Vec<&Value> = reports.iter().filter(|r| r["identity"] == "EQ11").collect();
    assert_eq!(eq11[0]["n"], "1/2");
}

#[test]
fn bench_verifies_then_times() {
    let o = bernoulli(&["bench", "--max-r", "100", "--reps", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["verified"], true);
    let methods = report["methods"].as_array().unwrap();
    let names: Vec<&str> = methods
        .iter()
        .map(|m| m["method"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["eq1", "eq2", "eq3", "eq4", "oracle"]);
    assert_eq!(methods[0]["last_index"], 101);
    assert_eq!(methods[4]["last_index"], 100);
}
