//! End-to-end exercises of the binary: exit-code contract, output shapes,
//! and reproducibility of data outputs under a fixed seed.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bend(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bend"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("bend-cli-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn eval_prints_fifteen_significant_digits() {
    let out = bend(&["eval", "--kind", "r", "--s", "0.25"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "0.549306144334055");

    let out = bend(&["eval", "--kind", "cL", "--L", "1", "--r", "0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "0 first-branch");
}

#[test]
fn eval_domain_violation_names_the_threshold() {
    let out = bend(&["eval", "--kind", "bL", "--L", "1", "--x", "0.4"]);
    assert_eq!(out.status.code(), Some(2));
    let msg = stderr(&out);
    assert!(msg.contains("sech(L)/2"), "missing threshold name: {msg}");
    assert!(msg.contains("0.324027"), "missing threshold value: {msg}");
}

#[test]
fn eval_missing_flags_is_usage_error() {
    let out = bend(&["eval", "--kind", "bL", "--L", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--x"));
}

#[test]
fn unknown_subcommand_flags_exit_two() {
    let out = bend(&["eval", "--kind", "nope", "--L", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = bend(&["verify", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_writes_csv_with_single_branch_flip() {
    let path = tmp("table.csv");
    let out = bend(&[
        "table",
        "--kind",
        "bL",
        "--L",
        "1",
        "--samples",
        "50",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "x,value,branch");
    assert_eq!(lines.len(), 51);
    let flips = lines[1..]
        .windows(2)
        .filter(|w| w[0].split(',').nth(2) != w[1].split(',').nth(2))
        .count();
    assert_eq!(flips, 1, "branch column must flip exactly once");
    std::fs::remove_file(&path).ok();
}

#[test]
fn verify_reports_are_reproducible_up_to_wall_time() {
    let run = || {
        let out = bend(&[
            "verify",
            "halfplane-lemma",
            "--L",
            "0.5",
            "--r",
            "0.5",
            "--trials",
            "300",
            "--seed",
            "7",
        ]);
        assert!(out.status.success(), "{}", stderr(&out));
        stdout(&out)
            .lines()
            .filter(|l| !l.contains("wall_time"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(run(), run(), "reports differ beyond wall_time");
}

#[test]
fn verify_exit_one_on_violations() {
    // An unreachable tolerance turns honest float residuals into violations,
    // exercising the mathematical-failure exit path.
    let out = bend(&["verify", "trig", "--trials", "50", "--tol", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("\"violations\""));
}

#[test]
fn lamination_files_and_validation_errors() {
    let good = tmp("good.json");
    std::fs::write(
        &good,
        r#"{"leaves": [{"endpoints": [0.4, 2.8], "weight": 2.5}]}"#,
    )
    .unwrap();
    let out = bend(&["lamination", "--input", good.to_str().unwrap(), "--L", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "2.5");
    std::fs::remove_file(&good).ok();

    // Two unit-weight leaves at hyperbolic gap 0.4 (both perpendicular to
    // the real diameter): short arcs cross one, longer arcs cross both.
    let pair = tmp("pair.json");
    let phi = |s: f64| 1.0_f64.atan2(s.sinh());
    let (p0, p1) = (phi(0.0), phi(0.4));
    let tau = std::f64::consts::TAU;
    std::fs::write(
        &pair,
        format!(
            r#"{{"leaves": [
                {{"endpoints": [{}, {}], "weight": 1.0}},
                {{"endpoints": [{}, {}], "weight": 1.0}}
            ]}}"#,
            p0,
            tau - p0,
            p1,
            tau - p1
        ),
    )
    .unwrap();
    let out = bend(&["lamination", "--input", pair.to_str().unwrap(), "--L", "0.3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1");
    let out = bend(&["lamination", "--input", pair.to_str().unwrap(), "--L", "0.5"]);
    assert_eq!(stdout(&out).trim(), "2");
    std::fs::remove_file(&pair).ok();

    // Crossing leaves are rejected with the offending pair named.
    let bad = tmp("bad.json");
    std::fs::write(
        &bad,
        r#"{"leaves": [
            {"endpoints": [0.0, 3.141592653589793], "weight": 1.0},
            {"endpoints": [1.0, 4.141592653589793], "weight": 1.0}
        ]}"#,
    )
    .unwrap();
    let out = bend(&["lamination", "--input", bad.to_str().unwrap(), "--L", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let msg = stderr(&out);
    assert!(msg.contains("0") && msg.contains("1") && msg.contains("cross"), "{msg}");
    std::fs::remove_file(&bad).ok();

    // Unparseable file.
    let junk = tmp("junk.json");
    std::fs::write(&junk, "{not json").unwrap();
    let out = bend(&["lamination", "--input", junk.to_str().unwrap(), "--L", "1"]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(&junk).ok();

    // Missing file is an I/O failure.
    let out = bend(&["lamination", "--input", "/no/such/file.json", "--L", "1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn unwritable_output_exits_three() {
    let out = bend(&[
        "table",
        "--kind",
        "bL",
        "--L",
        "1",
        "--samples",
        "5",
        "--out",
        "/no/such/dir/table.csv",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_wedge_passes_end_to_end() {
    let out = bend(&["verify", "wedge", "--k", "0.8", "--L", "1", "--samples", "2001"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("\"violations\": 0"), "{text}");
}
