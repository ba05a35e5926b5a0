use std::path::Path;
use std::process::{Command, Output};

fn mbfkit(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mbfkit"))
        .args(args)
        .current_dir(dir)
        .env_remove("MBFKIT_CHECKPOINT_DIR")
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn ok(dir: &Path, args: &[&str]) -> String {
    let out = mbfkit(dir, args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

#[test]
fn profiles_prints_count_and_writes_list() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(ok(dir.path(), &["profiles", "0"]).trim(), "1");
    assert_eq!(
        ok(dir.path(), &["profiles", "7", "-o", "p7.txt"]).trim(),
        "5460"
    );
    let list = std::fs::read_to_string(dir.path().join("p7.txt")).unwrap();
    assert_eq!(list.lines().count(), 5460);
    assert_eq!(list.lines().next(), Some("(0,0,0,0,0,0,0)"));
    assert!(dir.path().join("profiles_n0.txt").exists());
}

#[test]
fn count_summaries() {
    let dir = tempfile::tempdir().unwrap();
    let out = ok(dir.path(), &["count", "5", "--no-checkpoint"]);
    assert!(out.contains("R(5)=210 D(5)=7581"), "{out}");
    let csv = std::fs::read_to_string(dir.path().join("counts_n5.csv")).unwrap();
    assert!(csv.starts_with("profile,R_count,D_count,elapsed_seconds\n"));
    assert!(csv.contains("\"(0,2,2,0,0)\",7,"));
    assert!(csv.lines().last().unwrap().starts_with("total,210,7581,"));

    let out = ok(
        dir.path(),
        &["--jobs", "2", "count", "6", "--k", "7", "--no-checkpoint"],
    );
    assert!(out.contains("R_7(6)=2630"), "{out}");

    let out = ok(dir.path(), &["count", "5", "--profile", "(0,3,2,0,0)"]);
    assert!(out.starts_with("R(0,3,2,0,0)=6 "), "{out}");
}

#[test]
fn seven_variables_need_extended() {
    let dir = tempfile::tempdir().unwrap();
    let out = mbfkit(dir.path(), &["count", "7", "--no-checkpoint"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("extended"));
}

#[test]
fn bad_arguments_fail() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["count", "5", "--profile", "(0,11,0,0,0)"][..],
        &["count", "4", "--profile", "(0,1,0,0,0)"],
        &["count", "5", "--profile", "0,1"],
        &["profiles", "11"],
        &["verify", "9"],
    ] {
        assert!(!mbfkit(dir.path(), args).status.success(), "{args:?}");
    }
}

#[test]
fn checkpointed_count_resumes() {
    let dir = tempfile::tempdir().unwrap();
    let ck = dir.path().join("ck");
    let ck = ck.to_str().unwrap();
    let out = mbfkit(
        dir.path(),
        &["count", "6", "--checkpoint-dir", ck, "--stop-after", "300"],
    );
    assert!(!out.status.success());
    assert!(dir.path().join("ck/results.csv").exists());
    let out = Command::new(env!("CARGO_BIN_EXE_mbfkit"))
        .args(["count", "6"])
        .current_dir(dir.path())
        .env("MBFKIT_CHECKPOINT_DIR", ck)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("R(6)=16353 D(6)=7828354 asymmetric(6)=7281"));
}

#[test]
fn runs_are_deterministic_apart_from_timings() {
    let dir = tempfile::tempdir().unwrap();
    let strip = |name: &str| -> Vec<String> {
        std::fs::read_to_string(dir.path().join(name))
            .unwrap()
            .lines()
            .map(|l| l.rsplit_once(',').unwrap().0.to_string())
            .collect()
    };
    ok(
        dir.path(),
        &["count", "5", "--no-checkpoint", "-o", "a.csv"],
    );
    ok(dir.path(), &["count", "5", "-o", "b.csv"]);
    assert!(dir.path().join("mbfkit-checkpoints/results.csv").exists());
    assert_eq!(strip("a.csv"), strip("b.csv"));
}

#[test]
fn verify_small() {
    let dir = tempfile::tempdir().unwrap();
    let out = ok(dir.path(), &["verify", "4"]);
    assert!(out.contains("PASS class partition: 30 classes"), "{out}");
    assert!(out.trim_end().ends_with("verify(4): PASS"));
    let out = ok(dir.path(), &["verify", "2"]);
    assert!(out.contains("5 classes"));
}

#[test]
fn estimates() {
    let dir = tempfile::tempdir().unwrap();
    let out = ok(dir.path(), &["estimate", "7"]);
    let bound: u64 = out
        .lines()
        .find_map(|l| l.strip_prefix("lower_bound_R(7)="))
        .unwrap()
        .parse()
        .unwrap();
    assert!(bound >= 479103580);
    let out = ok(dir.path(), &["estimate", "8"]);
    assert!(out.contains("D(8)=56130437228687557907788 ratio="), "{out}");
    let out = ok(dir.path(), &["estimate", "1"]);
    assert!(
        out.contains("lower_bound_R(1)=3") && out.contains("R(1)=3"),
        "{out}"
    );
}
