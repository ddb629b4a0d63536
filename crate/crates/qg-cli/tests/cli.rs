//! Process-level contract tests for the `qg` binary: exit codes, the
//! stdout/stderr split, JSON byte-determinism, and 1-based display.

use std::process::Output;

fn qg(args: &[&str]) -> Output {
    std::process::Command::new(env!("CARGO_BIN_EXE_qg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    serde_json::from_slice(&output.stdout).expect("stdout is one JSON document")
}

#[test]
fn classify_json_reports_classes_and_shift() {
    let output = qg(&["classify", "--n", "13", "--a", "3", "--json"]);
    assert_eq!(output.status.code(), Some(0));
    assert!(output.stderr.is_empty());
    let json = stdout_json(&output);
    assert_eq!(json["classes"], serde_json::json!(["quadratical", "c3"]));
    assert_eq!(json["k"], serde_json::json!(8));
}

#[test]
fn classify_rejects_even_order_as_usage_error() {
    let output = qg(&["classify", "--n", "4", "--a", "3"]);
    assert_eq!(output.status.code(), Some(1));
    assert!(output.stdout.is_empty());
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("even"), "{stderr}");
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["bogus-verb"][..],
        &["enumerate", "--n", "5"],
        &["enumerate", "--n", "20", "--all-k"],
        &["construct", "--n", "9", "--k", "4"],
        &["oracle", "--max-n", "12"],
        &["orders", "--class", "hexagonal"],
        &["qq", "--n", "5", "--l", "2"],
        &["verify-tables", "--table", "4"],
    ] {
        let output = qg(args);
        assert_eq!(output.status.code(), Some(1), "argv {args:?}");
        assert!(!output.stderr.is_empty(), "argv {args:?}");
    }
}

#[test]
fn violations_exit_two_with_diagnostic() {
    let output = qg(&["qq", "--n", "5", "--l", "3", "--r", "3"]);
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.starts_with("violation:"), "{stderr}");
    assert!(!output.stdout.is_empty(), "result still rendered on stdout");
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(qg(&["--help"]).status.code(), Some(0));
    assert_eq!(qg(&["--version"]).status.code(), Some(0));
    assert_eq!(qg(&["classify", "--help"]).status.code(), Some(0));
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    for args in [
        &["classify", "--n", "13", "--a", "3", "--json"][..],
        &["construct", "--n", "7", "--k", "3", "--json"],
        &["orders", "--limit", "200", "--json"],
        &["survey", "--pairs", "--max-n", "101", "--json"],
        &["parastrophe", "--n", "11", "--a", "3", "--b", "9", "--json"],
        &["enumerate", "--n", "7", "--all-k", "--json"],
        &["qq", "--n", "13", "--json"],
        &["check", "--json"],
    ] {
        let first = qg(args);
        let second = qg(args);
        assert_eq!(first.status.code(), Some(0), "argv {args:?}");
        assert_eq!(first.stdout, second.stdout, "argv {args:?}");
        stdout_json(&first);
    }
}

#[test]
fn one_based_flag_shifts_rendered_tables() {
    let zero = qg(&["construct", "--n", "3", "--k", "2"]);
    let one = qg(&["construct", "--one-based", "--n", "3", "--k", "2"]);
    let h0 = String::from_utf8_lossy(&zero.stdout);
    let h1 = String::from_utf8_lossy(&one.stdout);
    assert!(h0.contains("0 2 1"), "{h0}");
    assert!(h1.contains("1 3 2"), "{h1}");
    // JSON stays 0-based regardless: it is the canonical form.
    let json = qg(&["construct", "--one-based", "--n", "3", "--k", "2", "--json"]);
    assert_eq!(
        stdout_json(&json)["table"]["rows"],
        serde_json::json!([[0, 2, 1], [2, 1, 0], [1, 0, 2]])
    );
}

#[test]
fn verification_verbs_verify_small_sweeps() {
    let tables = qg(&["verify-tables", "--max-n", "50"]);
    assert_eq!(tables.status.code(), Some(0));
    let oracle = qg(&["oracle", "--max-n", "8", "--json"]);
    assert_eq!(oracle.status.code(), Some(0));
    assert_eq!(stdout_json(&oracle)["verified"], serde_json::json!(true));
    let nonexistence = qg(&["nonexistence", "--max-n", "51", "--json"]);
    assert_eq!(nonexistence.status.code(), Some(0));
    assert_eq!(
        stdout_json(&nonexistence)["verified"],
        serde_json::json!(true)
    );
}

#[test]
fn check_verb_passes_whole_catalogue() {
    let output = qg(&["check", "--json"]);
    assert_eq!(output.status.code(), Some(0));
    let json = stdout_json(&output);
    assert_eq!(json["all_pass"], serde_json::json!(true));
    assert_eq!(json["count"], serde_json::json!(11));
}

#[test]
fn closing_stdout_early_is_not_an_error() {
    // Over 200 KB of table output guarantees the pipe buffer fills after the
    // reader is gone; the process must still exit cleanly, not panic.
    let mut child = std::process::Command::new(env!("CARGO_BIN_EXE_qg"))
        .args(["parastrophe", "--n", "101", "--a", "2", "--b", "100"])
        .stdout(std::process::Stdio::piped())
        .stderr(std::process::Stdio::piped())
        .spawn()
        .expect("binary runs");
    drop(child.stdout.take());
    let status = child.wait().expect("process finishes");
    assert_eq!(status.code(), Some(0));
    let mut stderr = String::new();
    std::io::Read::read_to_string(child.stderr.as_mut().unwrap(), &mut stderr).unwrap();
    assert!(!stderr.contains("panicked"), "{stderr}");
}

#[test]
fn from_table_checks_translation_structures() {
    let dir = std::env::temp_dir();
    let good = dir.join(format!("qg-cli-test-good-{}.csv", std::process::id()));
    let bad = dir.join(format!("qg-cli-test-bad-{}.csv", std::process::id()));
    // x·y = (2x + 4y) mod 5, a quadratical table.
    std::fs::write(&good, "0,4,3,2,1\n2,1,0,4,3\n4,3,2,1,0\n1,0,4,3,2\n3,2,1,0,4\n").unwrap();
    // Left projection: associative but not a valid structure source.
    std::fs::write(&bad, "0,0\n1,1\n").unwrap();

    let output = qg(&["qq", "--from-table", good.to_str().unwrap(), "--s", "2", "--json"]);
    assert_eq!(output.status.code(), Some(0));
    let json = stdout_json(&output);
    assert_eq!(json["verified"], serde_json::json!(true));
    assert_eq!(json["companion_is_base_point"], serde_json::json!(true));

    let output = qg(&["qq", "--from-table", bad.to_str().unwrap(), "--s", "0"]);
    assert_eq!(output.status.code(), Some(2));

    let output = qg(&["qq", "--from-table", "/nonexistent/table.csv", "--s", "0"]);
    assert_eq!(output.status.code(), Some(1));

    std::fs::remove_file(&good).ok();
    std::fs::remove_file(&bad).ok();
}
