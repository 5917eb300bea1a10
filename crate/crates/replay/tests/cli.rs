use std::io::Write;
use std::process::{Command, Output};

fn replay(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_burniat-replay")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn points_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn single_check_passes() {
    let o = replay(&["miyaoka"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("PASS  miyaoka"), "{out}");
    assert!(out.contains("r_max: claimed 3, computed 3"));
}

#[test]
fn jsonl_is_one_object_per_line() {
    let o = replay(&["ramification", "--format", "jsonl"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> =
        stdout(&o).lines().map(|l| serde_json::from_str(l).expect("valid json")).collect();
    assert_eq!(lines.len(), 4);
    for l in &lines[..3] {
        assert_eq!(l["report"]["status"], "PASS");
        assert!(!l["report"]["axioms_used"].as_array().unwrap().is_empty());
    }
    assert_eq!(lines[3]["summary"]["failed"], 0);
}

#[test]
fn lines_control_lattice() {
    let o = replay(&["lines", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("count: claimed 10, computed 10"));
}

#[test]
fn unsupported_lattice_is_an_input_error() {
    let o = replay(&["lines", "--n", "9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unsupported"));
}

#[test]
fn custom_points_in_general_position() {
    let f = points_file("# rational coordinates\n1 0 0\n0 1 0\n0 0 1\n1 1 1\n1/3 2/3 1\n");
    let o = replay(&["burniat", "--points", f.path().to_str().unwrap(), "--fuzz-samples", "0"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn collinear_points_fail_the_check() {
    let f = points_file("1 0 0\n0 1 0\n1 1 0\n0 0 1\n1 2 1\n");
    let o = replay(&["burniat", "--points", f.path().to_str().unwrap(), "--fuzz-samples", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("collinear triples [[1, 2, 3]]"));
}

#[test]
fn malformed_input_exits_with_two() {
    let f = points_file("1 0 0\n0 1\n");
    let o = replay(&["burniat", "--points", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let four = points_file("1 0 0\n0 1 0\n0 0 1\n1 1 1\n");
    assert_eq!(replay(&["burniat", "--points", four.path().to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(replay(&["burniat", "--points", "/no/such/file"]).status.code(), Some(2));
    assert_eq!(replay(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn all_is_deterministic_and_lists_axioms() {
    let args = ["all", "--fuzz-samples", "50", "--seed", "7"];
    let a = replay(&args);
    let b = replay(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    let out = stdout(&a);
    assert!(out.contains("Axioms assumed, not replayed:"));
    assert!(out.contains("galois-group:"));
    assert!(out.trim_end().ends_with("13 checks: 13 passed, 0 failed"));
}
