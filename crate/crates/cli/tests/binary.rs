//! Exit codes, output shape and the on-disk cache of the `qcanon` binary.

use std::path::Path;
use std::process::{Command, Output};

fn qcanon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcanon"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn basis(cache: &Path, report: &Path) -> Output {
    qcanon(&[
        "basis",
        "--rank",
        "2",
        "--bound",
        "4",
        "--cache-dir",
        cache.to_str().unwrap(),
        "--report",
        report.to_str().unwrap(),
    ])
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        qcanon(&["basis", "--rank", "2", "--bound", "99"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        qcanon(&["verify", "--suite", "nonsense"]).status.code(),
        Some(2)
    );
    assert_eq!(
        qcanon(&["reparam", "--from", "1,2", "--to", "2,1,2", "--input", "1,0,0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(qcanon(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn reparam_prints_path_and_cross_check() {
    let out = qcanon(&[
        "reparam", "--from", "1,2,1", "--to", "2,1,2", "--input", "1,0,0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["output"], serde_json::json!([0, 0, 1]));
    assert_eq!(v["cross_check"]["agrees"], true);
    assert_eq!(v["path"].as_array().unwrap().len(), 1);
}

#[test]
fn verify_single_suite_passes() {
    let out = qcanon(&["verify", "--suite", "pbwstring", "--rank", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["reports"][0]["summary"]["failed"], 0);
}

#[test]
fn warm_and_corrupted_cache_give_identical_reports() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let (cold, warm, healed) = (
        dir.path().join("a.json"),
        dir.path().join("b.json"),
        dir.path().join("c.json"),
    );

    let out = basis(&cache, &cold);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains(" 0 loaded"));

    let out = basis(&cache, &warm);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("tables: 0 built"));
    assert_eq!(std::fs::read(&cold).unwrap(), std::fs::read(&warm).unwrap());

    let victim = std::fs::read_dir(&cache)
        .unwrap()
        .map(|e| e.unwrap().path())
        .max()
        .unwrap();
    let mut bytes = std::fs::read(&victim).unwrap();
    let n = bytes.len();
    bytes[n - 3] ^= 0x55;
    std::fs::write(&victim, bytes).unwrap();

    let out = basis(&cache, &healed);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("(1 corrupt files recomputed)"));
    assert_eq!(
        std::fs::read(&cold).unwrap(),
        std::fs::read(&healed).unwrap()
    );
}
