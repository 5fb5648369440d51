use std::path::PathBuf;
use std::process::{Command, Output};

fn solvsph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_solvsph")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write_config(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("solvsph-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn check_spherical_preset() {
    let o = solvsph(&["check", "--preset", "sl4-sp4borel"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("spherical: yes"));
    assert!(out.contains("active roots (m = 2)"));
}

#[test]
fn check_borel_json() {
    let o = solvsph(&["check", "--preset", "borel", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["active"]["m"], 0);
}

#[test]
fn check_non_spherical_exits_one() {
    let o = solvsph(&["check", "--preset", "sl2-trivial"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn mixed_weight_constraint_is_input_error() {
    let path = write_config("mixed.txt", "[group]\nA2\n[torus]\n1 1\n[nilradical]\n1 0 : 1 ; 1 1 : 1\n");
    let o = solvsph(&["check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("different torus weights"));
}

#[test]
fn parse_error_reports_line() {
    let path = write_config("bad.txt", "[group]\nA2\n[torus]\n1 x\n");
    let o = solvsph(&["check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4"));
}

#[test]
fn semigroup_generators() {
    let o = solvsph(&["semigroup", "--preset", "sl4-sp4borel"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for g in ["(w3, (1, 0))", "(w2, (1, 1))", "(w1, (1, 0))", "(w1 + w3, (1, 1))", "(w2, 0)"] {
        assert!(out.contains(g), "{g} missing from\n{out}");
    }
    let o = solvsph(&["semigroup", "--preset", "maximal-unipotent", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let pretty: Vec<&str> = v["generators"].as_array().unwrap().iter().map(|g| g["pretty"].as_str().unwrap()).collect();
    assert_eq!(pretty, ["(w2, 0)", "(w1, 0)"]);
}

#[test]
fn semigroup_refuses_non_spherical() {
    let o = solvsph(&["semigroup", "--preset", "sl2-trivial"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not spherical"));
}

#[test]
fn json_output_is_byte_identical_and_reparses() {
    let a = solvsph(&["semigroup", "--preset", "tu-prime:A3", "--json"]);
    let b = solvsph(&["semigroup", "--preset", "tu-prime:A3", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    let path = write_config("report.json", &stdout(&a));
    let c = solvsph(&["semigroup", path.to_str().unwrap(), "--json"]);
    assert_eq!(c.stdout, a.stdout);
}

#[test]
fn verify_with_flags_and_env() {
    let o = solvsph(&["verify", "--preset", "sl2-torus", "--height", "3", "--trials", "50"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS semigroup equals oracle"));
    let o = Command::new(env!("CARGO_BIN_EXE_solvsph"))
        .args(["verify", "--preset", "sl4-sp4borel", "--json"])
        .env("SOLVSPH_HEIGHT", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["height_bound"], 2);
}

#[test]
fn verify_refuses_non_spherical_and_unsupported() {
    let o = solvsph(&["verify", "--preset", "sl2-trivial"]);
    assert_eq!(o.status.code(), Some(1));
    let o = solvsph(&["verify", "--preset", "borel:G2", "--height", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("does not support"));
}

#[test]
fn presets_list_and_show() {
    let o = solvsph(&["presets", "list"]);
    let out = stdout(&o);
    for name in ["borel", "maximal-unipotent", "tu-prime", "sl4-sp4borel", "sl2-torus", "sl2-trivial"] {
        assert!(out.contains(name));
    }
    let o = solvsph(&["presets", "show", "sl4-sp4borel"]);
    let out = stdout(&o);
    assert!(out.contains("1 1 0 : 1 ; 0 1 1 : -1"));
    let o = solvsph(&["presets", "show", "nope"]);
    assert_eq!(o.status.code(), Some(2));
}
