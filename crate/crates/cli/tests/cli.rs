use std::path::PathBuf;
use std::process::{Command, Output};

fn cache_dir(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("alcove-cli-test-{name}-{}", std::process::id()))
}

fn alcove(cache: &str, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alcove"))
        .args(args)
        .arg("--cache-dir")
        .arg(cache_dir(cache))
        .env_remove("ALCOVE_CACHE_DIR")
        .output()
        .expect("run alcove")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn g2_e_zero_at_one_is_fifteen() {
    let out = alcove("g2", &["emac", "--type", "G2", "--weight", "-1,0", "--spec", "zero", "--eval", "1,1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "15\n");
    let out = alcove("g2", &["emac", "--type", "G2", "--weight", "0,-1", "--spec", "zero", "--eval", "1,1"]);
    assert_eq!(stdout(&out), "7\n");
}

#[test]
fn a2_dimension_is_twenty_seven() {
    let out = alcove("a2", &["dims", "--type", "A2", "--weight", "-2,-1", "--sigma", "1,2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "27\n");
}

#[test]
fn empty_word_has_one_path() {
    let out = alcove("a1", &["paths", "--type", "A1", "--weight", "0", "--word", ""]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.ends_with("1 path\n"), "{text}");
    let out = alcove("a1", &["paths", "--type", "A1", "--weight", "0", "--word", "", "--count"]);
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn e_infinity_in_a1() {
    let out = alcove("a1inf", &["emac", "--type", "A1", "--weight", "-1", "--spec", "inf"]);
    assert_eq!(stdout(&out), "x1^-1 + x1 q\n");
}

#[test]
fn output_does_not_depend_on_workers() {
    let args = ["paths", "--type", "C2", "--weight", "-1,-1", "--sigma", "2", "--format", "csv"];
    let one = alcove("workers", &[&args[..], &["--workers", "1"]].concat());
    let four = alcove("workers", &[&args[..], &["--workers", "4"]].concat());
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    let rows = stdout(&one).lines().count() - 1;
    let count = alcove("workers", &["paths", "--type", "C2", "--weight", "-1,-1", "--sigma", "2", "--count"]);
    assert_eq!(stdout(&count).trim(), rows.to_string());
}

#[test]
fn dot_export_is_stable() {
    let a = alcove("dot", &["qbg", "--type", "A2", "--format", "dot"]);
    let b = alcove("dot", &["qbg", "--type", "A2", "--format", "dot"]);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert_eq!(text.matches(" -> ").count(), 15);
    assert_eq!(text.matches("kind=\"quantum\"").count(), 7);
}

#[test]
fn user_word_must_be_a_reduced_word_of_the_translation() {
    let ok = alcove("word", &["beta", "--type", "A1", "--weight", "-1", "--word", "0"]);
    assert!(ok.status.success());
    let bad = alcove("word", &["beta", "--type", "A1", "--weight", "-1", "--word", "1"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(alcove("codes", &["dims", "--type", "A2", "--weight", "-1"]).status.code(), Some(2));
    assert_eq!(alcove("codes", &["dims", "--type", "Q2", "--weight", "-1"]).status.code(), Some(2));
    assert_eq!(alcove("codes", &["frobnicate"]).status.code(), Some(2));
    assert_eq!(alcove("codes", &["qbg", "--type", "E8"]).status.code(), Some(3));
    let fail = alcove("codes", &["verify", "--type", "A1", "--suite", "pi-invariance"]);
    assert_eq!(fail.status.code(), Some(4));
    assert!(stdout(&fail).starts_with("FAIL pi-invariance"));
    let err: serde_json::Value = serde_json::from_slice(&fail.stderr).unwrap();
    assert_eq!(err["error"], "identity");
}

#[test]
fn default_verify_passes_on_a2() {
    let out = alcove("verify", &["verify", "--type", "A2", "--format", "json"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["passed"], true);
    assert_eq!(report["suites"].as_array().unwrap().len(), 8);
}

#[test]
fn cache_files_are_written() {
    let dir = cache_dir("files");
    let _ = std::fs::remove_dir_all(&dir);
    assert!(alcove("files", &["qbg", "--type", "B2"]).status.success());
    assert!(dir.join("B2.json").exists());
    assert!(dir.join("manifest.json").exists());
    let warm = alcove("files", &["qbg", "--type", "B2", "--format", "json"]);
    let cold = alcove("files-cold", &["qbg", "--type", "B2", "--format", "json"]);
    assert_eq!(warm.stdout, cold.stdout);
    let _ = std::fs::remove_dir_all(&dir);
}
