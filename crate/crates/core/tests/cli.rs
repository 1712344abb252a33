use std::path::PathBuf;
use std::process::{Command, Output};

fn gdnp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gdnp")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn relation_file(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gdnp-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn normalize_prints_tableaux() {
    let o = gdnp(&["--gens", "a,b,c", "normalize", "a@(b@c)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "b@(a@c) + (a@c)@b - (b@c)@a\n");
    let r = gdnp(&["--gens", "a,b,c", "--method", "rewrite", "normalize", "a@(b@c)"]);
    assert_eq!(stdout(&r), stdout(&o));
}

#[test]
fn normalize_json() {
    let o = gdnp(&["--format", "json", "normalize", "a@(b@c)"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["method"], "embed");
    let result = v["result"].as_array().unwrap();
    assert_eq!(result.len(), 3);
    assert_eq!(result[0]["tableau"]["term"], "b@(a@c)");
    assert_eq!(result[2]["coeff"], "-1");
    for entry in result {
        let tb = &entry["tableau"];
        assert!(tb["dots"].is_array() && tb["head"].is_string() && tb["rows"].is_array());
    }
}

#[test]
fn images_and_dimensions() {
    let o = gdnp(&["--gens", "a,b", "phi", "a@b"]);
    assert_eq!(stdout(&o), "D(b) & a\n");
    let o = gdnp(&["--gens", "a,b", "theta", "a@b"]);
    assert_eq!(stdout(&o), "D(b) * a\n");
    let o = gdnp(&["--gens", "a", "dims", "--letters", "a,a", "--circ", "1"]);
    assert_eq!(stdout(&o), "2\n");
    let o = gdnp(&["--gens", "a,b", "leading", "a@b + b@a"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("tableau: "));
}

#[test]
fn usage_errors_exit_two() {
    let o = gdnp(&["normalize", "a@b@c"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.starts_with("gdnp normalize: parse error at position 4"), "{err}");
    assert_eq!(gdnp(&["--gens", "a,a", "phi", "a"]).status.code(), Some(2));
    assert_eq!(gdnp(&["member", "--rel", "/nonexistent/rels", "a"]).status.code(), Some(2));
    assert_eq!(gdnp(&["dims", "--letters", "z", "--circ", "0"]).status.code(), Some(2));
}

#[test]
fn membership_and_pbw_check() {
    let rel = relation_file("square.rel", "# a@a vanishes\na@a\n");
    let rel = rel.to_str().unwrap();
    let o = gdnp(&["--gens", "a,b", "member", "--rel", rel, "--in", "c", "(a@a)*b"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "true\n"));
    let o = gdnp(&["--gens", "a,b", "--max-len", "3", "--max-deg", "1", "member", "--rel", rel, "b@b"]);
    assert_eq!(stdout(&o), "unknown at bound (max-len 3, max-deg 1)\n");
    let o = gdnp(&["--gens", "a,b", "--max-len", "3", "--max-deg", "1", "--format", "json", "pbw-check", "--rel", rel]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["consistent"], true);
    assert_eq!(v["rank_c0"], v["rank_gdnp0"]);
}

#[test]
fn selftest_is_reproducible() {
    let args = ["--gens", "a,b", "--seed", "11", "--trials", "40", "--format", "json", "selftest"];
    let first = gdnp(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, gdnp(&args).stdout);
    let v: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(v["ok"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 7);
}
