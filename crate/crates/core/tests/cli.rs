//! End-to-end tests of the qdim binary: spec'd invocations, exit codes,
//! and byte-level determinism of JSON output across worker counts.

use qdim::homs::family_images;
use std::process::Command;

fn qdim(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qdim"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

fn strip_timing(text: &str) -> String {
    text.lines()
        .filter(|l| !l.contains("\"timing_ms\""))
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn present_prints_sigma_and_the_family_word() {
    let (code, stdout, _) = qdim(&["present", "27/13"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("sigma: 2"));
    assert!(stdout.contains("K(27, 13)"));

    let (code, stdout, _) = qdim(&["present", "5/3"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("relator r1: x y^-1 x^-1 y x y^-1 x y x^-1 y^-1"));
}

#[test]
fn present_rejects_bad_parameters() {
    let (code, _, stderr) = qdim(&["present", "4/2"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("error"));

    let (code, _, _) = qdim(&["present", "27"]);
    assert_eq!(code, 2);

    let (code, _, _) = qdim(&["present", "27/13", "--family", "0", "--k", "5"]);
    assert_eq!(code, 2);
}

#[test]
fn homs_reports_the_figure_eight_a5_nonsurjection() {
    let (code, stdout, _) = qdim(&["homs", "5/3", "--target", "a5", "--surjective"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("total with class weights: 0"));
}

#[test]
fn homs_lists_the_canonical_surjection_in_exact_mode() {
    let (code, stdout, _) = qdim(&[
        "homs",
        "27/13",
        "--surgery",
        "7",
        "--target",
        "2i",
        "--surjective",
        "--exact-count",
        "--json",
    ]);
    assert_eq!(code, 0);
    let parsed: serde_json::Value = serde_json::from_str(&stdout).expect("valid JSON");
    assert_eq!(parsed["weighted_total"], 120);
    assert_eq!(parsed["exact_total"], 120);
    let (fx, fy) = family_images();
    let homs = parsed["homs"].as_array().unwrap();
    assert_eq!(homs.len(), 120);
    let canonical = homs
        .iter()
        .filter(|h| {
            h["images"][0]["element"] == fx.to_string()
                && h["images"][1]["element"] == fy.to_string()
        })
        .count();
    assert_eq!(canonical, 1);
}

#[test]
fn homs_accepts_raw_presentations() {
    let (code, stdout, _) = qdim(&[
        "homs",
        "--presentation",
        "gens: x, y ; rels:",
        "--target",
        "c:2",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("total with class weights: 4"));

    let (code, stdout, _) = qdim(&[
        "homs",
        "--presentation",
        "gens: x, y ; rels: x y^-1 x^-1 y x y^-1 x y x^-1 y^-1",
        "--target",
        "a5",
        "--surjective",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("total with class weights: 0"));

    let (code, _, _) = qdim(&["homs", "--presentation", "gens: x ; rels:", "--target", "a5"]);
    assert_eq!(code, 2);

    let (code, _, _) = qdim(&["homs", "--target", "a5"]);
    assert_eq!(code, 2);

    let (code, _, _) = qdim(&[
        "homs",
        "5/3",
        "--presentation",
        "gens: x, y ; rels:",
        "--target",
        "a5",
    ]);
    assert_eq!(code, 2);
}

#[test]
fn homs_counts_cyclic_targets() {
    let (code, stdout, _) = qdim(&["homs", "5/3", "--target", "c:5"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("total with class weights: 5"));

    let (code, stdout, _) = qdim(&["homs", "5/3", "--surgery", "1", "--target", "c:5"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("total with class weights: 1"));
}

#[test]
fn homs_rejects_unknown_targets_and_oversized_groups() {
    let (code, _, _) = qdim(&["homs", "5/3", "--target", "s5"]);
    assert_eq!(code, 2);

    let (code, _, stderr) = qdim(&["homs", "5/3", "--target", "c:1000"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("bound"));
}

#[test]
fn certify_2_concludes_and_writes_a_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    let path_text = path.to_str().unwrap();
    let (code, stdout, _) = qdim(&[
        "certify", "2", "--family", "0", "--k", "5", "--json", path_text,
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("conclusion: qdim=2"));
    let text = std::fs::read_to_string(&path).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&text).expect("valid JSON");
    assert_eq!(parsed["conclusion"], "qdim=2");
    assert_eq!(parsed["family"]["N"], 0);
    assert_eq!(parsed["family"]["k"], 5);
    assert_eq!(parsed["failed_stage"], serde_json::Value::Null);
}

#[test]
fn certify_2_rejects_non_integral_surgeries() {
    let (code, _, stderr) = qdim(&["certify", "2", "--family", "0", "--k", "1"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("divisible by 7"));
}

#[test]
fn certify_3_splits_criterion_from_failure() {
    let (code, stdout, _) = qdim(&["certify", "3", "5/3"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("conclusion: qdim=3-criterion"));

    let (code, stdout, _) = qdim(&["certify", "3", "9/4"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("conclusion: qdim=3-criterion"));

    let (code, stdout, _) = qdim(&["certify", "3", "27/13"]);
    assert_eq!(code, 1);
    assert!(stdout.contains("conclusion: criterion-fails"));
    assert!(stdout.contains("witness surjection"));
}

#[test]
fn certify_rejects_malformed_requests() {
    let (code, _, _) = qdim(&["certify", "3", "abc"]);
    assert_eq!(code, 2);

    let (code, _, _) = qdim(&["certify", "4", "5/3"]);
    assert_eq!(code, 2);

    let (code, _, _) = qdim(&["certify", "2", "5/3"]);
    assert_eq!(code, 2);

    let (code, _, _) = qdim(&["certify", "3", "5/3", "--family", "0"]);
    assert_eq!(code, 2);
}

#[test]
fn table_passes_with_the_control_row_detecting() {
    let (code, stdout, _) = qdim(&["table"]);
    assert_eq!(code, 0);
    let pass_lines = stdout.lines().filter(|l| l.starts_with("PASS")).count();
    assert_eq!(pass_lines, 33);
    assert!(!stdout.contains("FAIL"));
    assert!(stdout.contains("(control) K(27, 13): 120 A5 surjections"));
}

#[test]
fn selfcheck_passes() {
    let (code, stdout, _) = qdim(&["selfcheck"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("all checks passed"));
}

#[test]
fn unknown_flags_exit_2() {
    let (code, _, _) = qdim(&["present", "5/3", "--bogus"]);
    assert_eq!(code, 2);

    let (code, _, _) = qdim(&["frobnicate"]);
    assert_eq!(code, 2);
}

#[test]
fn json_output_is_deterministic_across_worker_counts() {
    let (code1, table1, _) = qdim(&["table", "--json", "--jobs", "1"]);
    let (code4, table4, _) = qdim(&["table", "--json", "--jobs", "4"]);
    assert_eq!((code1, code4), (0, 0));
    assert_eq!(strip_timing(&table1), strip_timing(&table4));

    let dir = tempfile::tempdir().unwrap();
    let path1 = dir.path().join("c1.json");
    let path4 = dir.path().join("c4.json");
    let (code1, _, _) = qdim(&[
        "certify", "3", "27/13", "--jobs", "1", "--json", path1.to_str().unwrap(),
    ]);
    let (code4, _, _) = qdim(&[
        "certify", "3", "27/13", "--jobs", "4", "--json", path4.to_str().unwrap(),
    ]);
    assert_eq!((code1, code4), (1, 1));
    let cert1 = std::fs::read_to_string(&path1).unwrap();
    let cert4 = std::fs::read_to_string(&path4).unwrap();
    assert_eq!(strip_timing(&cert1), strip_timing(&cert4));

    let (_, homs1, _) = qdim(&["homs", "21/5", "--target", "a5", "--json", "--jobs", "1"]);
    let (_, homs3, _) = qdim(&["homs", "21/5", "--target", "a5", "--json", "--jobs", "3"]);
    assert_eq!(strip_timing(&homs1), strip_timing(&homs3));
}
