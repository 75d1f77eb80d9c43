use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_posetdim"));
    cmd.args(args).env_remove("POSETDIM_PROFILE");
    for (k, v) in envs {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&[], &[]).status.code(), Some(2));
    assert_eq!(run(&["dim"], &[]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "identities"], &[]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nope", "--seed", "1"], &[]).status.code(), Some(2));
    assert_eq!(run(&["--help"], &[]).status.code(), Some(0));
}

#[test]
fn parse_errors_exit_2_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(&dir, "bad.poset", "poset bad\nelements a b\nrelations covers\na <\n");
    let out = run(&["dim", &f], &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("4"));
    let missing = dir.path().join("missing.poset").display().to_string();
    assert_eq!(run(&["dim", &missing], &[]).status.code(), Some(2));
}

#[test]
fn gen_then_dim_of_three_irreducible() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("b.poset").display().to_string();
    assert!(run(&["gen", "three-irreducible-b", "-o", &f], &[]).status.success());
    let out = run(&["dim", &f, "--json"], &[]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["dimension"], 3);
    assert_eq!(v["verified"], true);
    assert_eq!(v["realizer"].as_array().unwrap().len(), 3);
}

#[test]
fn oracle_refuses_large_input() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("c.poset").display().to_string();
    assert!(run(&["gen", "antichain", "9", "-o", &f], &[]).status.success());
    assert_eq!(run(&["dim", &f, "--oracle"], &[]).status.code(), Some(2));
    assert!(run(&["dim", &f], &[]).status.success());
}

#[test]
fn max_elements_flag_and_profile_env() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("c.poset").display().to_string();
    assert!(run(&["gen", "chain", "10", "-o", &f], &[]).status.success());
    assert_eq!(run(&["--max-elements", "5", "gen", "chain", "10"], &[]).status.code(), Some(2));
    assert_eq!(run(&["--max-elements", "15", "split", &f], &[]).status.code(), Some(2));
    assert!(run(&["--max-elements", "20", "split", &f], &[]).status.success());
    assert_eq!(run(&["dim", &f], &[("POSETDIM_PROFILE", "no-such-profile")]).status.code(), Some(2));
}

#[test]
fn verify_identities_passes() {
    let out = run(
        &["verify", "--suite", "identities", "--max-size", "7", "--trials", "200", "--seed", "42", "--json"],
        &[],
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v = json(&out);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn conjugate_of_separating_extension_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(&dir, "p.poset", "poset two_plus_two\nelements a b c d\nrelations covers\na < b\nc < d\n");
    let ok = run(&["ext", &f, "--conjugate", "a b c d", "--json"], &[]);
    assert!(ok.status.success());
    assert_eq!(json(&ok)["conjugate"], serde_json::json!(["c", "d", "a", "b"]));
    assert_eq!(run(&["ext", &f, "--conjugate", "a c b d"], &[]).status.code(), Some(2));
}

#[test]
fn hasse_export() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("t.poset").display().to_string();
    assert!(run(&["gen", "binary-tree", "2", "-o", &f], &[]).status.success());
    let out = run(&["export", &f, "--hasse"], &[]);
    assert!(out.status.success());
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 6);
}
