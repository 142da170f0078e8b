use std::path::Path;
use std::process::{Command, Output};

use mccoy_cli::Report;
use serde_json::Value;

fn mccoy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mccoy"))
        .args(args)
        .current_dir(Path::new(env!("CARGO_MANIFEST_DIR")).join("../.."))
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stderr))
    })
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn build_reports_structure() {
    let out = mccoy(&["build", "T(2, F2)"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["ring"]["size"], 8);
    assert_eq!(v["ring"]["idempotents"], 6);
    assert_eq!(v["schema_version"], 1);

    let out = mccoy(&["build", "rings/ex22.ring", "--verify-axioms"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["ring"]["size"], 16);
    assert_eq!(v["ring"]["basis"], serde_json::json!(["1", "x", "y", "z"]));
    assert_eq!(v["ring"]["axioms"]["result"], "verified");
    assert!(String::from_utf8_lossy(&out.stderr).contains("basis {1,x,y,z}"));
}

#[test]
fn build_errors_map_to_exit_codes() {
    let out = mccoy(&["build", "M(4, M(4, F3))"]);
    assert_eq!(code(&out), 3);
    let out = mccoy(&["build", "M(2, G2)"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("1:6"));
    let out = mccoy(&["build", "rings/missing.ring"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn check_matrix_ring() {
    let out = mccoy(&[
        "check",
        "--ring",
        "M(2, F2)",
        "--property",
        "right-central-mccoy",
        "--max-degree",
        "1",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let verdict = &v["verdicts"][0];
    assert_eq!(verdict["polarity"], "REFUTED");
    assert_eq!(verdict["certificate"]["f"]["index"], 18);
    assert_eq!(verdict["certificate"]["transcript"]["failures"].as_array().unwrap().len(), 15);

    let out = mccoy(&[
        "check",
        "--ring",
        "M(2, F2)",
        "--property",
        "right-central-mccoy",
        "--expect",
        "not-refuted",
    ]);
    assert_eq!(code(&out), 1);
}

#[test]
fn check_field_and_product() {
    let out = mccoy(&["check", "--ring", "F2", "--property", "right-mccoy", "--max-degree", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["verdicts"][0]["polarity"], "NOT_REFUTED");

    // (1, 0) witnesses every pair, so the product is not refuted
    let out = mccoy(&[
        "check",
        "--ring",
        "prod(F2, T(2, F2))",
        "--property",
        "right-central-mccoy",
        "--expect",
        "not-refuted",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["verdicts"][0]["universal_witness"]["index"], 1);
}

#[test]
fn check_truncated_algebra() {
    let out = mccoy(&[
        "check",
        "--ring",
        "rings/ex23.ring",
        "--window",
        "3",
        "--property",
        "right-central-mccoy",
        "--property",
        "left-central-mccoy",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["verdicts"][0]["polarity"], "REFUTED");
    assert_eq!(v["verdicts"][1]["polarity"], "NOT_REFUTED");
    assert_eq!(v["ring"]["window_words"], 36);

    let out = mccoy(&["check", "--ring", "rings/ex23.ring"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("--window"));
}

#[test]
fn check_rejects_degree_zero() {
    let out = mccoy(&["check", "--ring", "F2", "--property", "left-mccoy", "--max-degree", "0"]);
    assert_eq!(code(&out), 2);
    let out = mccoy(&["check", "--ring", "F2", "--property", "nonsense"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn paper_verify_entries() {
    for key in ["Example 2.2", "Theorem 2.9(2)", "Example 2.8"] {
        let out = mccoy(&["paper-verify", "--entry", key]);
        assert_eq!(code(&out), 0, "{key}");
        let v = json(&out);
        assert_eq!(v["entries"][0]["key"], key);
        assert_eq!(v["entries"][0]["status"], "PASS");
    }
    let out = mccoy(&["paper-verify", "--entry", "Example 9.9"]);
    assert_eq!(code(&out), 2);
    let out = mccoy(&["paper-verify"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn paper_verify_all_reports_every_entry() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = mccoy(&["paper-verify", "--all", "--out", path.to_str().unwrap()]);
    let text = std::fs::read_to_string(&path).unwrap();
    let report = Report::from_json(&text).unwrap();
    assert_eq!(report.entries.len(), 12);
    let failed: Vec<&str> = report
        .entries
        .iter()
        .filter(|e| e.status == mccoy_cli::Status::Fail)
        .map(|e| e.key.as_str())
        .collect();
    assert_eq!(failed, ["Proposition 2.4", "Proposition 2.7"]);
    assert_eq!(code(&out), 1);
    // lossless round trip
    assert_eq!(report.to_json(), text);
    assert!(report
        .traceability
        .iter()
        .any(|t| t.anchor == "Corollary 2.13 (3)" && !t.in_scope));
}

#[test]
fn markdown_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.md");
    let out = mccoy(&[
        "paper-verify",
        "--entry",
        "Example 2.8",
        "--format",
        "md",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("# mccoy paper-verify report (PASS)"));
    assert!(text.contains("## Example 2.8 (PASS)"));
    assert!(text.contains("| Example 2.8 | Example 2.8 |"));
}

#[test]
fn search_finds_separator() {
    let out = mccoy(&[
        "search",
        "--ring",
        "{F2|Z4|T(2, F2)|D(2, F2)|V(2, F2)|fp(\"rings/ex22.ring\")}",
        "--property",
        "right-mccoy",
        "--property",
        "right-central-mccoy",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let rows = v["search"].as_array().unwrap();
    assert_eq!(rows.len(), 6);
    let separators: Vec<&str> = rows
        .iter()
        .filter(|r| !r["separators"].as_array().unwrap().is_empty())
        .map(|r| r["ring"].as_str().unwrap())
        .collect();
    assert_eq!(separators, ["fp(\"rings/ex22.ring\")"]);
}

#[test]
fn search_commutative_and_empty() {
    let out = mccoy(&["search", "--ring", "{F2|F3|Z4|Z{6..8}|V({2..3}, F2)|quotpoly(F3, 2)}"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let rows = v["search"].as_array().unwrap();
    assert_eq!(rows.len(), 9);
    for row in rows {
        for verdict in row["verdicts"].as_array().unwrap() {
            assert_eq!(verdict["polarity"], "NOT_REFUTED", "{}", row["ring"]);
        }
    }
    let out = mccoy(&["search", "--ring", "{}"]);
    assert_eq!(code(&out), 0);
    assert!(json(&out)["search"].as_array().unwrap().is_empty());
}
