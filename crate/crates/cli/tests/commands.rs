use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const EXAMPLE: &str = "ring p=32003 vars=x,y,z; ideal I = x^2, x*y, z^2;";
const FERMAT: &str = "ring p=31981 vars=x,y,z;\nideal F = x*(y^3-z^3), y*(x^3-z^3), z*(x^3-y^3);";

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn run_stdin(input: &str, args: &[&str]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lindefect"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json_of(input: &str, args: &[&str]) -> Value {
    let out = run_stdin(input, args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn lind_of_example_ideal() {
    let out = run_stdin(EXAMPLE, &["lind", "-", "--ideal", "I"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "lind = 1");
}

#[test]
fn threshold_json_certificate() {
    let v = json_of(EXAMPLE, &["threshold", "-", "--ideal", "I", "--json"]);
    assert_eq!(v["command"], "threshold");
    let r = &v["result"];
    assert_eq!(r["N"], 1);
    assert_eq!(r["pd"], 2);
    assert_eq!(r["perLevel"][0]["T"], 2);
    assert_eq!(r["perLevel"][1]["T"], 1);
    assert_eq!(r["perLevel"][1]["n"], "-inf");
}

#[test]
fn json_is_byte_identical_and_hash_ignores_generator_order() {
    let a = run_stdin(EXAMPLE, &["lind-seq", "-", "--ideal", "I", "--max-n", "3", "--json"]);
    let b = run_stdin(EXAMPLE, &["lind-seq", "-", "--ideal", "I", "--max-n", "3", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    let shuffled = "ring p=32003 vars=x,y,z; ideal I = z^2, x^2, y*x;";
    let h1 = json_of(EXAMPLE, &["lind", "-", "--ideal", "I", "--json"]);
    let h2 = json_of(shuffled, &["lind", "-", "--ideal", "I", "--json"]);
    assert_eq!(h1["input-hash"], h2["input-hash"]);
    assert_eq!(h1["result"], h2["result"]);
}

#[test]
fn fermat_saturated_sequence_from_file() {
    let path = data("fermat.lds");
    let out = Command::new(env!("CARGO_BIN_EXE_lindefect"))
        .args(["lind-seq", path.to_str().unwrap(), "--ideal", "F", "--variant", "saturation-power"])
        .args(["--max-n", "4", "--json"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let values = &v["result"]["values"];
    assert_eq!(values["3"]["lind"], 0);
    assert_eq!(values["4"]["lind"], 1);
    assert_eq!(values["4"]["minDegree"], 13);
}

#[test]
fn field_override_to_rationals() {
    let v = json_of(FERMAT, &["lind", "-", "--ideal", "F", "--field", "QQ", "--json"]);
    assert_eq!(v["result"]["lind"], 1);
}

#[test]
fn betti_table_and_sega() {
    let out = run_stdin(EXAMPLE, &["resolve", "-", "--ideal", "I", "--betti"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("total: 3 3 1"), "{text}");
    let v = json_of(EXAMPLE, &["sega", "-", "--ideal", "I", "--i", "2", "--q", "2", "--json"]);
    assert_eq!(v["result"]["zero"], true);
}

#[test]
fn errors_carry_position_and_context() {
    let out = run_stdin("ring QQ vars=x,y;\nideal I = x^2 + q;", &["lind", "-", "--ideal", "I"]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "{err}");
    let out = run_stdin(EXAMPLE, &["lind", "-", "--ideal", "J"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("J"));
}
