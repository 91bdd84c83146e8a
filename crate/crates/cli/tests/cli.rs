use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_artransfer")).args(args).output().expect("spawn")
}

fn json(args: &[&str]) -> serde_json::Value {
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn ar_quiver_dot() {
    let out = run(&["ar-quiver", fixture("a3.json").to_str().unwrap(), "--format", "dot"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let nodes = text.lines().filter(|l| l.contains("[label=")).count();
    let dashed = text.lines().filter(|l| l.contains("style=dashed")).count();
    let solid = text.lines().filter(|l| l.contains("->") && !l.contains("dashed")).count();
    assert_eq!((nodes, solid, dashed), (6, 6, 3));
}

#[test]
fn sub_ar_a3() {
    let q = json(&["sub-ar", fixture("a3.json").to_str().unwrap(), "--format", "json"]);
    assert_eq!(q["nodes"].as_array().unwrap().len(), 17);
    assert_eq!(q["arrows"].as_array().unwrap().len(), 24);
    assert_eq!(q["tau"].as_array().unwrap().len(), 11);
}

#[test]
fn functor_quiver_dual_numbers() {
    let q = json(&["gprj-functor-quiver", fixture("dualnumbers.json").to_str().unwrap(), "--format", "json"]);
    assert_eq!(q["nodes"].as_array().unwrap().len(), 10);
    assert_eq!(q["arrows"].as_array().unwrap().len(), 14);
}

#[test]
fn output_is_deterministic_across_seeds() {
    let a3 = fixture("a3.json");
    let a = run(&["sub-ar", a3.to_str().unwrap(), "--format", "json", "--seed", "1"]);
    let b = run(&["sub-ar", a3.to_str().unwrap(), "--format", "json", "--seed", "99"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bad_relation_exits_with_input_error() {
    let dir = std::env::temp_dir().join(format!("artransfer-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    let text = std::fs::read_to_string(fixture("a3rel.json")).unwrap().replace("a*b", "a*z");
    std::fs::write(&path, text).unwrap();
    let out = run(&["indecs", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains('z'));
}

#[test]
fn counts_on_a3() {
    let out = run(&["counts", fixture("a3.json").to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("mod") && l.contains("17")));
}
