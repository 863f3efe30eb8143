//! Golden-file tests pinning the CLI's exact output and exit codes.

use std::process::{Command, Output};

fn meadow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_meadow"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

#[test]
fn eval_division_by_zero_prints_the_absorbing_value() {
    let out = meadow(&["eval", "x*x^-1", "--model", "qbot", "-b", "x=0"]);
    assert_eq!(stdout_of(&out), "_|_\n");
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn eval_reduces_numerals_in_prime_fields() {
    let out = meadow(&["eval", "5", "--model", "fp:5"]);
    assert_eq!(stdout_of(&out), "0\n");
    let out = meadow(&["eval", "1/2 + 1/3", "--model", "qbot"]);
    assert_eq!(stdout_of(&out), "5/6\n");
}

#[test]
fn decide_equal_pair() {
    let out = meadow(&["decide", "x*x^-1", "1 + 0*x^-1"]);
    assert_eq!(stdout_of(&out), "EQUAL\n");
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn decide_unequal_pair_reports_reason_witness_and_exit_one() {
    let out = meadow(&["decide", "x*x^-1", "1"]);
    assert_eq!(stdout_of(&out), "NOT-EQUAL (p2)\ncounterexample: x=_|_\n");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn check_md_bot_on_f5_prints_seventeen_pass_lines() {
    let out = meadow(&["check", "md_bot", "--model", "fp:5", "--strategy", "exhaustive"]);
    let stdout = stdout_of(&out);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 17);
    assert!(lines.iter().all(|l| l.ends_with("pass")));
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn check_failures_exit_one() {
    let out = meadow(&["check", "laws", "--model", "fracpair", "--strategy", "random:2000"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_of(&out).contains("FAIL"));
}

#[test]
fn fracpair_addition_keeps_common_factors() {
    let out = meadow(&["fracpair", "add", "1/2", "1/2"]);
    assert_eq!(stdout_of(&out), "2/2\n");
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn fracpair_ops() {
    assert_eq!(stdout_of(&meadow(&["fracpair", "inv", "2/3"])), "9/6\n");
    assert_eq!(stdout_of(&meadow(&["fracpair", "canon", "2/4"])), "1/2\n");
    assert_eq!(stdout_of(&meadow(&["fracpair", "to-rational", "9/6"])), "3/2\n");
    assert_eq!(stdout_of(&meadow(&["fracpair", "inv", "0/1"])), "_|_\n");
}

#[test]
fn normalize_text_output() {
    let out = meadow(&["normalize", "1/x + 1/y"]);
    assert_eq!(stdout_of(&out), "num: x + y\nden: x*y\nsupport: x, y\n");
    let out = meadow(&["normalize", "bot + x"]);
    assert_eq!(stdout_of(&out), "bottom\n");
}

#[test]
fn records_format_emits_json() {
    let out = meadow(&["decide", "(x*x - 1)/(x - 1)", "x + 1", "--format", "records"]);
    let record: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(record["verdict"], "not-equal");
    assert_eq!(record["reason"], "p1");
    assert_eq!(record["counterexample"]["x"], "1");

    let out = meadow(&["normalize", "x * x^-1", "--format", "records"]);
    let record: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(record["num"], "x");
    assert_eq!(record["den"], "x");
    assert_eq!(record["support"], serde_json::json!(["x"]));

    let out = meadow(&["check", "md", "--model", "qzero", "--format", "records", "--strategy", "random:100"]);
    for line in stdout_of(&out).lines() {
        let record: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(record["outcome"], "pass");
        assert_eq!(record["seed"], 1729);
    }
}

#[test]
fn identical_seeds_reproduce_reports_byte_for_byte() {
    let args = ["check", "derived", "--model", "qbot", "--strategy", "random:2000", "--seed", "7"];
    let first = meadow(&args);
    let second = meadow(&args);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["eval", "x +", "--model", "qbot"],
        &["eval", "x", "--model", "nosuch"],
        &["eval", "x", "-b", "x"],
        &["check", "nosuch", "--model", "qbot"],
        &["check", "md_bot", "--model", "qbot", "--strategy", "exhaustive"],
        &["fracpair", "add", "1/2"],
        &["fracpair", "frobnicate", "1/2"],
        &["eval", "bot", "--model", "qzero"],
    ];
    for args in cases {
        let out = meadow(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
        assert!(!out.stderr.is_empty(), "args {args:?} should explain the error");
    }
}
