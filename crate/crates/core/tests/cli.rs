//! Runs the binary against checked-in golden outputs. Set `HESSGKM_BLESS=1`
//! to rewrite them.

use std::path::PathBuf;
use std::process::{Command, Output};

mod common;
use common::GOLDEN;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hessgkm"))
        .args(args)
        .output()
        .unwrap()
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

#[test]
fn outputs_match_golden_files() {
    let bless = std::env::var_os("HESSGKM_BLESS").is_some();
    for (file, args) in GOLDEN {
        let out = bin(args);
        assert!(out.status.success(), "{args:?}");
        let path = golden_dir().join(file);
        if bless {
            std::fs::write(&path, &out.stdout).unwrap();
            continue;
        }
        let want = std::fs::read(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
        assert!(out.stdout == want, "{file} differs from golden output");
        assert_eq!(bin(args).stdout, out.stdout, "{file} not deterministic");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(bin(&["classify", "--h", "3,3,4,4"]).status.code(), Some(2));
    assert_eq!(
        bin(&["classify", "--h", "1,2,3", "--w", "12"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        bin(&["graph", "--h", "9,9,9,9,9,9,9,9,9", "--max-n", "8"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        bin(&["verify", "--suite", "bruhat,patterns", "--n-max", "4"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        bin(&["verify", "--suite", "upper-length"]).status.code(),
        Some(1)
    );
    assert_eq!(bin(&["--help"]).status.code(), Some(0));
}

#[test]
fn graph_writes_to_file() {
    let dir = std::env::temp_dir().join(format!("hessgkm-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g.dot");
    let out = bin(&["graph", "--h", "2,2,3", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.matches(" -- ").count(), 3);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn budget_gives_partial_result() {
    let out = bin(&[
        "verify",
        "--suite",
        "patterns",
        "--n-max",
        "6",
        "--budget-seconds",
        "0",
        "--json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v[0]["complete"], false);
}
