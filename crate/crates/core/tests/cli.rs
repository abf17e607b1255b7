//! End-to-end runs of the `posetlab` binary.

use std::process::Command;

use serde_json::Value;

fn run(args: &[&str], cache: Option<&std::path::Path>) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_posetlab"));
    cmd.args(args).env_remove("POSETLAB_CACHE_DIR");
    if let Some(dir) = cache {
        cmd.env("POSETLAB_CACHE_DIR", dir);
    }
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn e_of_butterfly() {
    let (code, stdout, _) = run(&["--json", "e", "butterfly"], None);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["result"]["value"], "2");
    assert_eq!(v["result"]["status"], "Exact");
}

#[test]
fn lambda_and_la() {
    let (code, stdout, _) = run(&["lambda", "butterfly", "--n", "3"], None);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("lambda(3, butterfly) = 3  (exact)"), "{stdout}");
    let (_, stdout, _) = run(&["--json", "la", "fan(3,2)", "--n", "2", "--all"], None);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["result"]["value"], "3");
    let chain = serde_json::json!({"n": 2, "sets": [[], [1], [1, 2]]});
    assert!(v["maximizers"].as_array().unwrap().contains(&chain));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["e", "fan(2,3)"], None).0, 2);
    assert_eq!(run(&["e", "osum_i(butterfly, chain(2))"], None).0, 1);
    assert_eq!(run(&["la", "butterfly"], None).0, 2);
    assert_eq!(run(&["verify", "no-such-suite"], None).0, 1);
}

#[test]
fn embed_family_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fam.json");
    std::fs::write(&path, r#"{"n": 3, "sets": [[], [1], [2], [3], [1,2,3]]}"#).unwrap();
    let (code, stdout, _) = run(&["--json", "embed", "butterfly", "--family", path.to_str().unwrap()], None);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["contained"], false);
    let (_, stdout, _) = run(&["embed", "v(3)", "--family", path.to_str().unwrap()], None);
    assert!(stdout.contains("is contained in"), "{stdout}");
}

#[test]
fn warm_cache_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let commands: [&[&str]; 4] = [
        &["e", "osum_i(diamond(3), diamond(3))"],
        &["lbound", "fan(3,2,2)", "--n", "4", "--m", "1"],
        &["--json", "scan-lower", "v(2)", "--beta", "3/4", "--n", "2..3"],
        &["intervals", "fan(3,3)"],
    ];
    for args in commands {
        let cold = run(args, Some(dir.path()));
        let warm = run(args, Some(dir.path()));
        let fresh = run(args, None);
        assert_eq!(cold.0, 0);
        assert_eq!(cold, warm);
        assert_eq!(cold, fresh);
    }
    let text = std::fs::read_to_string(dir.path().join("posetlab-cache.jsonl")).unwrap();
    assert_eq!(text.lines().count(), 4);
    let (code, stdout, _) = run(&["compact-cache"], Some(dir.path()));
    assert_eq!(code, 0, "{stdout}");
}

#[test]
fn verify_and_report() {
    let (code, stdout, _) = run(&["verify", "paper-core"], None);
    assert_eq!(code, 0, "{stdout}");
    assert!(!stdout.contains("FAIL"));
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.md");
    let (code, _, _) = run(&["report", "--out", out.to_str().unwrap()], None);
    assert_eq!(code, 0);
    let md = std::fs::read_to_string(out).unwrap();
    assert!(md.contains("| `butterfly` | 2 | exact |"));
}
