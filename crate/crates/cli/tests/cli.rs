//! End-to-end tests of the `verlinde` binary: output formats, exit codes,
//! and cache behavior.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_verlinde"))
}

fn run_with_cache(cache: &Path, args: &[&str]) -> Output {
    bin()
        .env("VERLINDE_CACHE", cache)
        .args(args)
        .output()
        .expect("binary runs")
}

fn run(args: &[&str]) -> Output {
    // Point the cache into a scratch directory so tests never touch the
    // working tree.
    let dir = tempfile::tempdir().unwrap();
    run_with_cache(&dir.path().join("cache.jsonl"), args)
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn compute_text_values() {
    for (group, level, genus, expect) in [
        ("sl:2", "1", "2", "4\n"),
        ("spin:7", "2", "2", "85\n"),
        ("spin:8", "2", "2", "184\n"),
    ] {
        let out = run(&[
            "compute", "--group", group, "--level", level, "--genus", genus, "--no-cache",
        ]);
        assert_eq!(exit_code(&out), 0);
        assert_eq!(stdout(&out), expect, "{group}");
    }
}

#[test]
fn compute_json_is_stable_ordered() {
    let out = run(&[
        "compute", "--group", "sl:2", "--level", "1", "--genus", "2", "--no-cache", "--format",
        "json",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        stdout(&out),
        "{\"group\":\"sl:2\",\"level\":1,\"genus\":2,\"value\":\"4\"}\n"
    );
}

#[test]
fn compute_csv_has_fixed_header() {
    let out = run(&[
        "compute", "--group", "spin:7", "--level", "2", "--genus", "2", "--no-cache", "--format",
        "csv",
    ]);
    assert_eq!(stdout(&out), "group,level,genus,value\nspin:7,2,2,85\n");
}

#[test]
fn cache_hits_are_byte_identical_and_cleared_cache_recomputes() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.jsonl");
    let args = [
        "compute", "--group", "spin:9", "--level", "2", "--genus", "3", "--format", "json",
    ];

    let first = run_with_cache(&cache, &args);
    assert_eq!(exit_code(&first), 0);
    let contents = std::fs::read_to_string(&cache).unwrap();
    assert_eq!(contents.lines().count(), 1, "one record per computed value");

    let second = run_with_cache(&cache, &args);
    assert_eq!(stdout(&first), stdout(&second));
    // The hit did not append a duplicate record.
    assert_eq!(std::fs::read_to_string(&cache).unwrap(), contents);

    std::fs::remove_file(&cache).unwrap();
    let third = run_with_cache(&cache, &args);
    assert_eq!(stdout(&first), stdout(&third));
    assert_eq!(std::fs::read_to_string(&cache).unwrap(), contents);
}

#[test]
fn no_cache_writes_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.jsonl");
    let out = run_with_cache(
        &cache,
        &[
            "compute", "--group", "sl:3", "--level", "2", "--genus", "2", "--no-cache",
        ],
    );
    assert_eq!(exit_code(&out), 0);
    assert!(!cache.exists());
}

#[test]
fn split_values_and_partition() {
    let out = run(&[
        "split", "--group", "spin:3", "--level", "4", "--genus", "2",
    ]);
    assert_eq!(stdout(&out), "8 27\n");
    let out = run(&[
        "split", "--group", "spin:5", "--level", "2", "--genus", "2",
    ]);
    assert_eq!(stdout(&out), "8 50\n");
}

#[test]
fn split_rejects_even_spin() {
    let out = run(&[
        "split", "--group", "spin:8", "--level", "2", "--genus", "2",
    ]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn theta_prym_and_height_values() {
    let out = run(&["theta", "--genus", "2", "--level", "3", "--parity", "even"]);
    assert_eq!(stdout(&out), "5\n");
    let out = run(&["theta", "--genus", "3", "--level", "1", "--parity", "odd"]);
    assert_eq!(stdout(&out), "0\n");
    let out = run(&[
        "prym-sum", "--genus", "2", "--level", "3", "--parity", "even",
    ]);
    assert_eq!(stdout(&out), "35\n");
    for (group, rep, expect) in [
        ("spin:7", "vector", "2\n"),
        ("sl:4", "ext2", "2\n"),
        ("spin:3", "adjoint", "4\n"),
    ] {
        let out = run(&["height", "--group", group, "--rep", rep]);
        assert_eq!(stdout(&out), expect, "{group} {rep}");
    }
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["compute", "--group", "sl:x", "--level", "1", "--genus", "2"],
        vec!["compute", "--group", "so:5", "--level", "1", "--genus", "2"],
        vec!["compute", "--group", "sl:2", "--level", "0", "--genus", "2"],
        vec!["compute", "--group", "sl:2", "--level", "1", "--genus", "0"],
        vec!["height", "--group", "sl:2", "--rep", "vector"],
        vec!["verify", "--suite", "reciprocity", "--pairs", "4,6"],
    ] {
        let out = run(&args);
        assert_eq!(exit_code(&out), 2, "args: {args:?}");
    }
    // Unknown flags are clap usage errors, also exit 2.
    let out = run(&["compute", "--grp", "sl:2"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn resource_bounds_exit_3() {
    let out = run(&[
        "compute", "--group", "spin:99", "--level", "1", "--genus", "2",
    ]);
    assert_eq!(exit_code(&out), 3);
    let out = run(&[
        "compute", "--group", "sl:2", "--level", "600", "--genus", "2",
    ]);
    assert_eq!(exit_code(&out), 3);
}

#[test]
fn verify_heights_passes() {
    let out = run(&["verify", "--suite", "heights"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("0 failures"), "{text}");
}

#[test]
fn verify_prym_subset_passes() {
    let out = run(&["verify", "--suite", "prym", "--genus-max", "3"]);
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn verify_explicit_reciprocity_pair() {
    let out = run(&[
        "verify",
        "--suite",
        "reciprocity",
        "--pairs",
        "5,7",
        "--genus-min",
        "2",
        "--genus-max",
        "2",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("1 checks, 0 failures"));
}

#[test]
fn verify_json_reports_parse() {
    let out = run(&[
        "verify", "--suite", "consistency", "--genus-max", "2", "--format", "json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let reports: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let reports = reports.as_array().unwrap();
    assert!(!reports.is_empty());
    for r in reports {
        assert_eq!(r["status"], "pass");
        assert!(r["name"].as_str().unwrap().starts_with("consistency_"));
        assert!(r["lhs"].is_string() && r["rhs"].is_string());
    }
}

#[test]
fn verify_csv_reports_have_header() {
    let out = run(&[
        "verify", "--suite", "spin8", "--genus-max", "2", "--format", "csv",
    ]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "name,parameters,lhs,rhs,status,elapsed_ms"
    );
    assert!(lines.next().unwrap().starts_with("spin8_triality,g=2,184,184,pass"));
}

#[test]
fn verify_remaining_suites_pass() {
    for args in [
        vec![
            "verify", "--suite", "closed-forms", "--genus-max", "2", "--rank-max", "5",
        ],
        vec![
            "verify", "--suite", "term-table", "--genus-max", "2", "--rank-max", "5",
        ],
        vec!["verify", "--suite", "clifford", "--samples", "6"],
    ] {
        let out = run(&args);
        assert_eq!(exit_code(&out), 0, "args: {args:?}");
        assert!(stdout(&out).contains(" 0 failures"), "args: {args:?}");
    }
}

#[test]
fn verify_all_reduced_config_passes() {
    let out = run(&[
        "verify",
        "--suite",
        "all",
        "--genus-max",
        "2",
        "--rank-max",
        "5",
        "--level-max",
        "5",
        "--samples",
        "6",
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
}
