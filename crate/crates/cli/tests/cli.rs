use std::path::PathBuf;
use std::process::{Command, Output};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_horrocks"))
        .args(args)
        .current_dir(root())
        .env_remove("MONAD_DMAX")
        .output()
        .expect("spawn horrocks")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

/// Body rows of the first markdown table.
fn md_rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .take_while(|l| l.starts_with('|'))
        .skip(2)
        .map(|l| l.trim_matches('|').split(" | ").map(|c| c.trim().to_string()).collect())
        .collect()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut v = args.to_vec();
    v.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&v)).unwrap()
}

#[test]
fn spectra_counts() {
    assert_eq!(md_rows(&stdout(&["spectra", "--c2", "8"])).len(), 7);
    assert_eq!(md_rows(&stdout(&["spectra", "--c2", "2"])).len(), 1);
    assert_eq!(json(&["spectra", "--c2", "6"]).as_array().unwrap().len(), 4);
}

#[test]
fn spectra_rejects_odd_and_small() {
    assert_eq!(code(&["spectra", "--c2", "7"]), 3);
    assert_eq!(code(&["spectra", "--c2", "0"]), 3);
}

#[test]
fn shapes_positive_c2_6() {
    let rows = md_rows(&stdout(&["shapes", "--c2", "6", "--class", "positive"]));
    let labels: Vec<&str> = rows.iter().map(|r| r[3].as_str()).collect();
    assert_eq!(labels, ["P1", "P2", "P3", "P4", "P5", "P6"]);
    let p5 = &rows[4];
    assert!(p5[5].contains("ForcedZeroColumn"));
    assert_eq!(p5[6], "no_stable_cohomology");
}

#[test]
fn shapes_nonnegative_c2_8() {
    let rows = md_rows(&stdout(&["shapes", "--c2", "8", "--class", "nonnegative"]));
    let labels: Vec<String> = rows.iter().map(|r| r[3].clone()).collect();
    let want: Vec<String> = (4..=13).map(|i| format!("N{i}")).collect();
    assert_eq!(labels, want);
}

#[test]
fn shapes_negative_c2_8_is_empty_with_note() {
    let text = stdout(&["shapes", "--c2", "8", "--class", "negative"]);
    assert!(text.contains("no negative minimal Horrocks monads"));
    assert!(md_rows(&text).is_empty(), "{text}");
}

#[test]
fn shapes_negative_c2_6_is_empty() {
    let text = stdout(&["shapes", "--c2", "6", "--class", "negative"]);
    assert!(md_rows(&text).is_empty());
    assert!(text.contains("no negative minimal Horrocks monads"));
}

#[test]
fn shapes_accepts_spellings_and_spectrum_filter() {
    let a = stdout(&["shapes", "--c2", "6", "--class", "non_negative", "--mode", "paper_table"]);
    let b = stdout(&["shapes", "--c2", "6", "--class", "nonnegative", "--mode", "strict"]);
    assert_eq!(a, b);
    let rows = md_rows(&stdout(&["shapes", "--c2", "6", "--spectrum", "r0r1^2"]));
    assert_eq!(rows.len(), 2);
    assert_eq!(code(&["shapes", "--c2", "6", "--spectrum", "r0r1r2^2"]), 3);
    assert_eq!(code(&["shapes", "--c2", "6", "--class", "bogus"]), 3);
}

#[test]
fn verify_p4_passes() {
    let out = run(&["verify", "fixtures/p4.json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("spectrum=r0r1^2"));
    let checks: Vec<String> = md_rows(&text).iter().map(|r| r[1].clone()).collect();
    assert_eq!(checks, ["validate", "complex", "subbundle", "surjective", "stable", "spectrum", "c2"]);
}

#[test]
fn verify_broken_fails_complex() {
    let out = run(&["verify", "fixtures/p4_broken.json"]);
    assert_eq!(out.status.code(), Some(1));
    let rows = md_rows(&String::from_utf8(out.stdout).unwrap());
    let complex = rows.iter().find(|r| r[1] == "complex").unwrap();
    assert_eq!(complex[2], "fail");
}

#[test]
fn verify_small_bound_is_inconclusive() {
    assert_eq!(code(&["verify", "fixtures/p3.json", "--dmax", "2"]), 2);
    let out = Command::new(env!("CARGO_BIN_EXE_horrocks"))
        .args(["verify", "fixtures/p3.json"])
        .current_dir(root())
        .env("MONAD_DMAX", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_exit_is_worst_status() {
    assert_eq!(code(&["verify", "p4", "p8"]), 0);
    assert_eq!(code(&["verify", "p4", "p4_broken"]), 1);
    assert_eq!(code(&["verify", "p3", "p4"]), 0);
}

#[test]
fn verify_input_errors() {
    assert_eq!(code(&["verify", "fixtures/missing.json"]), 3);
    assert_eq!(code(&["verify", "Cargo.toml"]), 3);
    assert_eq!(code(&["verify", "p4", "--checks", "nonsense"]), 3);
    assert_eq!(code(&["verify", "p4", "--field", "12"]), 3);
    assert_eq!(code(&["verify"]), 3);
}

#[test]
fn verify_json_report() {
    let v = json(&["verify", "p10", "--checks", "spectrum"]);
    let r = &v[0];
    assert_eq!(r["status"], "pass");
    assert_eq!(r["spectrum"], "r0^2r1^2");
    assert_eq!(r["reports"].as_array().unwrap().len(), 1);
}

#[test]
fn verify_prime_field_is_marked_as_screen() {
    let text = stdout(&["verify", "p4", "--field", "32003"]);
    assert!(text.contains("GF(32003)"));
    assert!(text.contains("screen"));
}

#[test]
fn dims_tabulated() {
    let rows = md_rows(&stdout(&["dims", "--tabulated"]));
    assert_eq!(rows.len(), 9);
    let dims: Vec<&str> = rows.iter().map(|r| r[7].as_str()).collect();
    assert_eq!(dims, ["**43**", "**43**", "45", "50", "**59**", "58", "**59**", "67", "78"]);
    assert_eq!(stdout(&["dims", "--table5"]), stdout(&["dims", "--tabulated"]));
}

#[test]
fn dims_single_shape() {
    let rows = md_rows(&stdout(&["dims", "--a", "2,2", "--b", "1,1,1"]));
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0][7], "45");
    assert_eq!(json(&["dims", "--a", "2,2", "--b", "1,1,1"])[0]["dim"], 45);
}

#[test]
fn dims_length_mismatch() {
    assert_eq!(code(&["dims", "--a", "1", "--b", "0,0,0"]), 3);
    assert_eq!(code(&["dims"]), 3);
}

#[test]
fn transform_examples() {
    let v = json(&["transform", "--shape", "P3", "--r", "2", "--u", "2", "--v", "1"]);
    assert_eq!(v["from"]["c2"], 6);
    assert_eq!(v["to"]["c2"], 8);
    assert_eq!(v["to"]["labels"], serde_json::json!(["P9"]));
    let v = json(&["transform", "--shape", "P4", "--r", "2", "--u", "2", "--v", "1"]);
    assert_eq!(v["to"]["labels"], serde_json::json!(["P12"]));
    let v = json(&["transform", "--fixture", "fixtures/p4.json", "--r", "2", "--u", "2", "--v", "1"]);
    assert_eq!(v["to"]["labels"], serde_json::json!(["P12"]));
    let v = json(&["transform", "--a", "1,2", "--b", "0,0,1", "--r", "2", "--u", "1", "--v", "2"]);
    assert_eq!(v["to"]["labels"], serde_json::json!(["P9"]));
}

#[test]
fn transform_rejects_bad_parameters() {
    assert_eq!(code(&["transform", "--shape", "P1", "--r", "2", "--u", "1", "--v", "1"]), 3);
    assert_eq!(code(&["transform", "--shape", "P99", "--r", "2", "--u", "2", "--v", "1"]), 3);
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["--version"]), 0);
    assert_eq!(code(&["frobnicate"]), 3);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["shapes", "--c2", "8", "--class", "positive", "--format", "json"][..],
        &["verify", "p4", "p8", "--format", "csv"][..],
        &["dims", "--tabulated", "--format", "csv"][..],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout);
    }
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("horrocks-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("spectra.csv");
    let p = path.to_str().unwrap();
    assert_eq!(code(&["spectra", "--c2", "4", "--format", "csv", "--output", p]), 0);
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 3);
    std::fs::remove_dir_all(&dir).unwrap();
}
