//! End-to-end checks of the installed binary: output bytes and exit codes.

use std::process::{Command, Output};

fn wormcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wormcalc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = wormcalc(args);
    assert!(out.status.success(), "{args:?} failed: {out:?}");
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    wormcalc(args).status.code().expect("no signal")
}

#[test]
fn order_type_of_the_running_example() {
    assert_eq!(stdout_of(&["ot", "--compact", "2103"]), "w^(w^w) + w^w\n");
    assert_eq!(stdout_of(&["ot", "[2, 1, 0, 3]"]), "w^(w^w) + w^w\n");
}

#[test]
fn order_type_at_a_level() {
    assert_eq!(stdout_of(&["ot", "[w]", "--xi", "w"]), "1\n");
    assert_eq!(stdout_of(&["ot", "[w]", "--xi", "w + 1"]), "0\n");
}

#[test]
fn comparisons_at_level_zero_are_total() {
    assert_eq!(stdout_of(&["cmp", "--compact", "1", "10"]), "EQ\n");
    assert_eq!(stdout_of(&["cmp", "--compact", "11", "101"]), "GT\n");
    assert_eq!(stdout_of(&["cmp", "--compact", "101", "11"]), "LT\n");
}

#[test]
fn comparison_above_level_zero_can_be_incomparable() {
    assert_eq!(
        stdout_of(&["cmp", "--compact", "1", "101", "--xi", "1"]),
        "incomparable\n"
    );
    assert_eq!(stdout_of(&["cmp", "[w]", "[1]", "--xi", "1"]), "GT\n");
}

#[test]
fn sequence_lists_one_step_per_line() {
    assert_eq!(stdout_of(&["seq", "--compact", "0"]), "0: 1\n1: 0\n");
    assert_eq!(stdout_of(&["seq", "[w]"]), "0: phi(1,0)\nw: 1\nw + 1: 0\n");
}

#[test]
fn hyper_operations() {
    assert_eq!(stdout_of(&["hexp", "w", "1"]), "phi(1,0)\n");
    assert_eq!(stdout_of(&["hexp", "w^2", "1"]), "phi(2,0)\n");
    assert_eq!(stdout_of(&["hlog", "w", "phi(1,0)"]), "1\n");
    assert_eq!(stdout_of(&["hlog", "1", "w^5 + w"]), "1\n");
}

#[test]
fn wormof_and_norm() {
    assert_eq!(stdout_of(&["wormof", "w"]), "[1, 0]\n");
    assert_eq!(stdout_of(&["wormof", "phi(1,0)"]), "[w, 0]\n");
    assert_eq!(stdout_of(&["norm", "w^phi(1,0)"]), "phi(1,0)\n");
    assert_eq!(stdout_of(&["norm", "(w + 1) * w"]), "w^2\n");
}

#[test]
fn json_output_is_byte_deterministic() {
    let first = stdout_of(&["--json", "ot", "--compact", "2103"]);
    let second = stdout_of(&["--json", "ot", "--compact", "2103"]);
    assert_eq!(first, second);
    assert_eq!(
        first,
        "{\"command\":\"ot\",\"inputs\":[\"[2, 1, 0, 3]\"],\"result\":\"w^(w^w) + w^w\"}\n"
    );
}

#[test]
fn json_sequence_uses_canonical_strings() {
    assert_eq!(
        stdout_of(&["--json", "seq", "--compact", "0"]),
        "{\"command\":\"seq\",\"inputs\":[\"[0]\"],\"result\":[{\"start\":\"0\",\"value\":\"1\"},{\"start\":\"1\",\"value\":\"0\"}]}\n"
    );
}

#[test]
fn json_cmp_includes_the_level() {
    assert_eq!(
        stdout_of(&["--json", "cmp", "--compact", "1", "101", "--xi", "1"]),
        "{\"command\":\"cmp\",\"inputs\":[\"[1]\",\"[1, 0, 1]\",\"1\"],\"result\":\"incomparable\"}\n"
    );
}

#[test]
fn selfcheck_passes_on_the_default_range() {
    let out = stdout_of(&["selfcheck"]);
    assert!(out.contains("pass: true"), "{out}");
    assert!(out.contains("worms: 63"), "{out}");
}

#[test]
fn parse_errors_exit_one_with_a_position() {
    let out = wormcalc(&["norm", "w +"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("byte 3"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(exit_code(&["frobnicate"]), 1);
    assert_eq!(exit_code(&["ot"]), 1);
}

#[test]
fn guard_violations_exit_two() {
    let out = wormcalc(&["selfcheck", "--len", "9"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("guard"), "{err}");
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(exit_code(&["--help"]), 0);
    assert_eq!(exit_code(&["--version"]), 0);
    assert_eq!(exit_code(&["ot", "--help"]), 0);
}
