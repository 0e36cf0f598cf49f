//! Runs every example binary (built by `cargo test`) and checks it exits cleanly.

use std::path::PathBuf;
use std::process::Command;

const EXAMPLES: &[&str] = &[
    "dual_numbers",
    "dual_quaternions",
    "matrices",
    "independence",
    "eigen",
    "minimax",
    "svd",
    "fan_hoffman",
    "generalized_inverse",
    "cli_roundtrip",
];

fn example_dir() -> PathBuf {
    // target/<profile>/deps/<this test> -> target/<profile>/examples
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().join("examples")
}

#[test]
fn every_example_runs() {
    let dir = example_dir();
    for name in EXAMPLES {
        let path = dir.join(format!("{name}{}", std::env::consts::EXE_SUFFIX));
        assert!(path.exists(), "example {name} not built at {}", path.display());
        let out = Command::new(&path).output().unwrap();
        assert!(out.status.success(), "{name} failed:\n{}", String::from_utf8_lossy(&out.stderr));
        assert!(!out.stdout.is_empty(), "{name} printed nothing");
    }
}

#[test]
fn list_covers_the_examples_directory() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples");
    let mut found: Vec<String> = std::fs::read_dir(dir)
        .unwrap()
        .filter_map(|e| e.ok()?.path().file_stem()?.to_str().map(str::to_owned))
        .collect();
    found.sort();
    let mut listed: Vec<String> = EXAMPLES.iter().map(|s| s.to_string()).collect();
    listed.sort();
    assert_eq!(found, listed);
}
