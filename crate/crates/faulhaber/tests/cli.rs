//! End-to-end checks of the command-line contract: determinism, the JSON
//! round-trip guarantee, stream separation, and exit statuses.

use std::process::Command;

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_faulhaber"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
        out.status.code().expect("exit code"),
    )
}

#[test]
fn identical_argv_gives_byte_identical_output() {
    for args in [
        vec!["bern", "12"],
        vec!["poly", "bernoulli", "6", "--basis", "centered"],
        vec!["faulhaber", "9", "--format", "json"],
        vec!["verify", "--max-m", "4", "--format", "json"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert_eq!(first, second, "nondeterministic output for {args:?}");
    }
}

#[test]
fn json_documents_reparse_to_the_same_bytes() {
    for args in [
        vec!["bern", "20", "--format", "json"],
        vec!["poly", "bernoulli", "5", "--basis", "u", "--format", "json"],
        vec!["faulhaber", "10", "--format", "json"],
        vec!["eval", "9", "44", "--format", "json"],
        vec!["verify", "--max-m", "3", "--format", "json"],
    ] {
        let (stdout, _, code) = run(&args);
        assert_eq!(code, 0);
        let value: serde_json::Value = serde_json::from_str(stdout.trim_end()).expect("valid json");
        let rerendered = serde_json::to_string(&value).unwrap();
        assert_eq!(rerendered, stdout.trim_end(), "round trip changed {args:?}");
    }
}

#[test]
fn json_big_integers_are_decimal_strings() {
    let (stdout, _, code) = run(&["eval", "100", "1000", "--format", "json"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(stdout.trim_end()).unwrap();
    let digits = value["value"].as_str().expect("value is a string");
    assert!(digits.len() > 250, "S_100(1000) should be enormous");
    assert!(digits.chars().all(|c| c.is_ascii_digit()));
}

#[test]
fn usage_errors_exit_2_with_stderr_diagnostics() {
    for args in [
        vec!["faulhaber", "0"],
        vec!["eval", "0", "5"],
        vec!["eval", "4", "0"],
        vec!["verify", "--max-m", "0"],
        vec!["verify", "--only", "Tmystery"],
        vec!["bern"],
        vec!["bern", "not-a-number"],
        vec!["poly", "bernoulli", "4", "--basis", "q"],
    ] {
        let (stdout, stderr, code) = run(&args);
        assert_eq!(code, 2, "expected usage failure for {args:?}");
        assert!(stdout.is_empty(), "usage errors must not write stdout: {args:?}");
        assert!(!stderr.is_empty(), "diagnostic expected on stderr: {args:?}");
    }
}

#[test]
fn results_go_to_stdout_only() {
    let (stdout, stderr, code) = run(&["eval", "10", "100"]);
    assert_eq!(code, 0);
    assert!(stderr.is_empty());
    // independently: sum(i**10 for i in 1..=100)
    assert_eq!(stdout, "959924142434241924250\n");
}

#[test]
fn verify_exit_zero_and_deterministic_table() {
    let (stdout, _, code) = run(&["verify", "--max-m", "2"]);
    assert_eq!(code, 0);
    assert!(stdout.ends_with("all 7 reports passed (max m = 2)\n"));
}

#[test]
fn latex_outputs_are_fragments() {
    let (stdout, _, _) = run(&["faulhaber", "7", "--format", "latex"]);
    assert!(!stdout.contains("\\documentclass"));
    assert!(stdout.starts_with("S_{7}"));
    let (table, _, _) = run(&["verify", "--max-m", "1", "--format", "latex"]);
    assert!(table.starts_with("\\begin{array}"));
    assert!(table.trim_end().ends_with("\\end{array}"));
}
