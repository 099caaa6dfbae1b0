//! The command-line tool: exit codes, report shape, golden outputs.

use std::process::{Command, Output};

use serde_json::Value;

fn superalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superalg")).args(args).output().expect("binary runs")
}

fn lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).expect("json line")).collect()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"))).expect("golden file")
}

#[test]
fn passing_check_exits_zero_with_summary() {
    let out = superalg(&["table1", "--family", "W", "--m", "1", "--n", "2", "--degree", "-1", "--expect", "(1|2)", "--canonical"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), golden("table1_w12.jsonl"));
}

#[test]
fn corrupted_check_exits_one_with_witness() {
    let out = superalg(&["table1", "--family", "W", "--m", "1", "--n", "2", "--degree", "-1", "--expect", "(1|2)", "--corrupt"]);
    assert_eq!(out.status.code(), Some(1));
    let reports = lines(&out);
    assert_eq!(reports[0]["status"], "fail");
    assert!(!reports[0]["witnesses"].as_array().unwrap().is_empty());
    assert_eq!(reports.last().unwrap()["fail"], 1);
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(superalg(&["hodge", "--q", "diag:1,0"]).status.code(), Some(2));
    assert_eq!(superalg(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(superalg(&["table1", "--family", "Q", "--m", "1", "--n", "1"]).status.code(), Some(2));
}

#[test]
fn every_report_has_the_required_keys() {
    let out = superalg(&["jacobi", "--family", "H", "--m", "2", "--n", "2", "--samples", "20"]);
    assert_eq!(out.status.code(), Some(0));
    let reports = lines(&out);
    let (summary, checks) = reports.split_last().unwrap();
    assert_eq!(summary["summary"], true);
    for r in checks {
        for key in ["check-id", "family", "params", "status", "expected", "actual", "seed", "elapsed-ms", "witnesses"] {
            assert!(r.get(key).is_some(), "missing {key} in {r}");
        }
    }
}

#[test]
fn text_output() {
    let out = superalg(&["--out", "text", "hodge", "--q", "diag:1,1,1,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("PASS"));
}

#[test]
fn lambda_table_matches_golden() {
    let out = superalg(&["lambda-table", "--q", "diag:2,-1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text, golden("lambda_table_diag_2_-1.jsonl"));

    // [1_λ m] = -(∂ + (2 - deg m / 2) λ) m
    for row in lines(&out).iter().filter(|r| r["a"] == "1") {
        let b = row["b"].as_str().unwrap();
        let deg = if b == "1" { 0 } else { b.split('*').count() };
        let weight = match 4 - deg {
            4 => "-2".to_string(),
            w if w % 2 == 0 => format!("-{}", w / 2),
            w => format!("-{w}/2"),
        };
        let lam = &row["lambda"];
        assert_eq!(lam[0], serde_json::json!([{"d": 1, "mono": b, "coeff": "-1"}]), "{row}");
        assert_eq!(lam[1], serde_json::json!([{"d": 0, "mono": b, "coeff": weight}]), "{row}");
    }
}
