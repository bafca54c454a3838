//! End-to-end checks of the command-line interface: golden outputs for the
//! documented invocations, exit codes, and JSON mode.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_starfact"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).trim_end().to_string()
}

#[test]
fn count_golden() {
    let out = run(&["count", "(13)(285)(4)(67)"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1080");
}

#[test]
fn repivot_golden() {
    let out = run(&[
        "repivot",
        "(6 8)(6 1)(6 3)(6 1)(6 2)(6 5)(6 8)(6 7)(6 4)(6 4)",
        "--perm",
        "(13)(285)(4)(67)",
        "--to",
        "3",
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "(3 1)(3 8)(3 2)(3 5)(3 7)(3 4)(3 4)(3 6)(3 7)(3 8)"
    );
}

#[test]
fn word_golden() {
    let out = run(&[
        "word",
        "(6 8)(6 1)(6 3)(6 1)(6 2)(6 5)(6 8)(6 7)(6 4)(6 4)",
        "--perm",
        "(13)(285)(4)(67)",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2111222433");
}

#[test]
fn leq_golden() {
    let out = run(&["leq", "(132)", "(12)(3)"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "true");

    let out = run(&["leq", "(1234)", "(13)(24)"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "false");
}

#[test]
fn enum_lists_factorizations() {
    let out = run(&["enum", "(123)", "--pivot", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "(1 3)(1 2)");
}

#[test]
fn verify_accepts_and_rejects() {
    let out = run(&[
        "verify",
        "(6 8)(6 1)(6 3)(6 1)(6 2)(6 5)(6 8)(6 7)(6 4)(6 4)",
        "--perm",
        "(13)(285)(4)(67)",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "true");

    let out = run(&["verify", "(1 2)(1 3)", "--perm", "(123)"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "false");

    // Empty factorization of the trivial permutation.
    let out = run(&["verify", "", "--perm", "(1)", "--pivot", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "true");
}

#[test]
fn lnc_and_lncn_counts() {
    let out = run(&["lnc", "2,2", "--count"]);
    assert_eq!(stdout(&out), "4");
    let out = run(&["lncn", "2,2", "--count"]);
    assert_eq!(stdout(&out), "1");
    let out = run(&["lncn", "3,4,2,2", "--count"]);
    assert_eq!(stdout(&out), "90");
    let out = run(&["lnc", "2,2"]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 4);
    assert!(text.contains("1:{1,2} 2:{3,4}"));
}

#[test]
fn interval_certificate() {
    let out = run(&[
        "interval",
        "(12345)(678)",
        "(15)(23)(4)(67)(8)",
        "--certify",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("certificate: pass [NC(3) x NC(2)]"));
    assert_eq!(text.lines().count(), 11); // 10 elements + certificate line
}

#[test]
fn json_mode_emits_single_document() {
    let out = run(&["count", "(13)(285)(4)(67)", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(doc["count"], "1080");
    assert_eq!(doc["permutation"], "(1 3)(2 8 5)(4)(6 7)");

    let out = run(&["dot", "3", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(doc["n"], 3);
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 6);
    assert_eq!(doc["edges"].as_array().unwrap().len(), 9);
}

#[test]
fn dot_output() {
    let out = run(&["dot", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("digraph star_poset {"));
    assert!(text.contains("rankdir=BT"));
}

#[test]
fn exit_codes() {
    // Domain error: malformed permutation.
    let out = run(&["count", "(1 2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));

    // Domain error: incomparable interval endpoints.
    let out = run(&["interval", "(1234)", "(13)(24)"]);
    assert_eq!(out.status.code(), Some(1));

    // Usage error: unknown subcommand.
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));

    // Usage error: missing required argument.
    let out = run(&["enum", "(123)"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn selftest_small() {
    let out = run(&["selftest", "--max-n", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().count() >= 10);
    for line in text.lines() {
        let doc: serde_json::Value = serde_json::from_str(line).expect("JSON line");
        assert_eq!(doc["pass"], true, "{line}");
    }
}

#[test]
fn determinism() {
    let first = run(&["enum", "(13)(24)", "--pivot", "1"]);
    let second = run(&["enum", "(13)(24)", "--pivot", "1"]);
    assert_eq!(first.stdout, second.stdout);
}
