use std::process::Command;

use qhopf_cli::run_args;
use serde_json::Value;

fn qhopf(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qhopf")).args(args).output().expect("spawn");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["qhopf"];
    full.extend_from_slice(args);
    run_args(full).unwrap().json
}

#[test]
fn every_output_carries_schema_and_command() {
    for (cmd, args) in [
        ("normalize", vec!["normalize", "a a^*"]),
        ("mul", vec!["mul", "a", "b"]),
        ("star", vec!["star", "a b"]),
        ("winding", vec!["winding", "a + b^*"]),
        ("coaction", vec!["coaction", "a"]),
        ("gluing-check", vec!["gluing-check", "a b^*"]),
        ("connection", vec!["connection", "--k", "-2"]),
        ("idempotent", vec!["idempotent", "--mu", "1"]),
        ("pairing", vec!["pairing", "--mu", "2"]),
        ("trace", vec!["trace", "1 - b b^*"]),
    ] {
        let j = json(&args);
        assert_eq!(j["schema"], 1, "{cmd}");
        assert_eq!(j["command"], cmd);
    }
}

#[test]
fn pairing_minus_one() {
    let j = json(&["pairing", "--mu", "-1"]);
    assert_eq!(j["value"], "-1");
    assert_eq!(j["integer"], true);
}

#[test]
fn star_is_antimultiplicative_through_the_cli() {
    let lhs = json(&["star", "a b"]);
    let rhs = json(&["mul", "b^*", "a^*"]);
    assert_eq!(lhs["output"], rhs["output"]);
}

#[test]
fn winding_components() {
    let j = json(&["winding", "a + b a^*"]);
    let w: Vec<i64> = j["components"].as_array().unwrap().iter().map(|c| c["winding"].as_i64().unwrap()).collect();
    assert_eq!(w.len(), 2);
    assert_eq!(j["coinvariant"], false);
}

#[test]
fn trace_value_and_numeric_check() {
    let j = json(&["trace", "1 - a a^*"]);
    assert_eq!(j["value"], "1/(1 - q)");
    assert_eq!(j["at"]["value"], "3/2");
    assert_eq!(j["numeric"]["pass"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(qhopf(&["pairing", "--mu", "-1"]).0, 0);
    assert_eq!(qhopf(&["normalize", "f1 a"]).0, 2);
    assert_eq!(qhopf(&["normalize", "a +"]).0, 2);
    assert_eq!(qhopf(&["frobnicate"]).0, 2);
    assert_eq!(qhopf(&["idempotent", "--mu", "0"]).0, 2);
    assert_eq!(qhopf(&["trace", "a"]).0, 2);
}

#[test]
fn text_mode() {
    let (code, out) = qhopf(&["--text", "pairing", "--mu", "-1"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.starts_with("value") && l.trim_end().ends_with("-1")), "{out}");
}

#[test]
fn seed_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_qhopf")).args(["verify", "classical"]).env("QHOPF_SEED", "123").output().unwrap();
    let j: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(j["params"]["seed"], 123);
}

#[test]
fn verify_all_is_the_conjunction_of_its_parts() {
    let all = json(&["verify", "all"]);
    let suites = all["suites"].as_array().unwrap();
    let parts = ["algebra", "gluing", "galois", "chern", "numeric", "classical"];
    assert_eq!(suites.len(), parts.len());
    let mut conj = true;
    for (s, name) in suites.iter().zip(parts) {
        let single = json(&["verify", name]);
        assert_eq!(single["suites"][0], *s, "{name}");
        conj &= single["pass"].as_bool().unwrap();
    }
    assert_eq!(all["pass"].as_bool().unwrap(), conj);
    assert!(conj);
}
