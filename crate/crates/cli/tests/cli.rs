use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn chromix(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chromix"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn poly_examples() {
    let o = chromix(&["poly", &fixture("mixed_triangle.txt")]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("1/6*k^3 + 1/2*k^2 - 2/3*k"));
    let values: Vec<String> = lines.skip(1).map(|l| l.split_whitespace().last().unwrap().to_string()).collect();
    assert_eq!(values, ["0", "2", "7", "16"]);

    let o = chromix(&["poly", "--strong", &fixture("single_arc.txt")]);
    assert_eq!(stdout(&o).lines().next(), Some("1/2*k^2 - 1/2*k"));
    let o = chromix(&["poly", &fixture("empty3.txt")]);
    assert_eq!(stdout(&o).lines().next(), Some("k^3"));
}

#[test]
fn dot_and_lines_inputs_agree() {
    let a = stdout(&chromix(&["poly", &fixture("mixed_triangle.txt")]));
    let b = stdout(&chromix(&["poly", &fixture("mixed_triangle.dot")]));
    let c = stdout(&chromix(&["poly", "--format", "dot", &fixture("mixed_triangle.dot")]));
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn poly_json_shape() {
    let o = chromix(&["poly", "--json", &fixture("mixed_triangle.txt")]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["command"], "poly");
    assert_eq!(v["polynomial"], serde_json::json!(["0/1", "-2/3", "1/2", "1/6"]));
    assert_eq!(v["values"][1], serde_json::json!([2, "2/1"]));
}

#[test]
fn eval_examples() {
    let f = fixture("mixed_triangle.txt");
    assert_eq!(stdout(&chromix(&["eval", &f, "-k", "-2"])), "2\n");
    assert_eq!(stdout(&chromix(&["eval", &f, "-k", "-2", "--signed"])), "2\n-2\n");
    assert_eq!(stdout(&chromix(&["eval", &f, "-k", "3"])), "7\n");
    for name in ["mixed_triangle.txt", "mixed_triangle.dot", "single_arc.txt", "empty3.txt", "edge_then_arc.txt", "triangle.txt", "path.dot"] {
        assert_eq!(stdout(&chromix(&["eval", &fixture(name), "-k", "0"])), "0\n", "{name}");
    }
}

#[test]
fn orientations_rows() {
    let f = fixture("mixed_triangle.txt");
    let out = stdout(&chromix(&["orientations", &f]));
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 2);
    assert!(rows[0].contains(" no"));
    assert!(rows[1].contains(" yes"));
    let out = stdout(&chromix(&["orientations", "--acyclic-only", &f]));
    assert_eq!(out.lines().count(), 2);
    let out = stdout(&chromix(&["orientations", &fixture("path.dot")]));
    assert_eq!(out.lines().count(), 2);
    let out = stdout(&chromix(&["orientations", "-k", "2", &fixture("edge_then_arc.txt")]));
    assert!(out.lines().next().unwrap().ends_with("intercompatible(k=2)"));
}

#[test]
fn reciprocity_exit_codes() {
    let o = chromix(&["reciprocity", "--kmax", "3", &fixture("single_arc.txt")]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("verdict: PASS\n"));

    let f = fixture("mixed_triangle.txt");
    let o = chromix(&["reciprocity", "--force", "--kmax", "2", &f]);
    assert_eq!(code(&o), 1);
    let row = stdout(&o).lines().find(|l| l.trim_start().starts_with("2 ")).unwrap().to_string();
    assert_eq!(row.split_whitespace().collect::<Vec<_>>(), ["2", "-2", "0", "FAIL"]);

    let o = chromix(&["reciprocity", &f]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not an acyclic mixed graph"));

    let o = chromix(&["reciprocity", "--strong", "--kmax", "3", &f]);
    assert_eq!(code(&o), 0);
}

#[test]
fn reciprocity_json() {
    let o = chromix(&["reciprocity", "--force", "--kmax", "2", "--json", &fixture("mixed_triangle.txt")]);
    assert_eq!(code(&o), 1);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], false);
    assert_eq!(v["rows"][1]["lhs"], "-2/1");
    assert_eq!(v["rows"][1]["rhs"], "0/1");
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    for k in keys {
        assert!(["command", "input", "polynomial", "rows", "verdict", "failures"].contains(&k.as_str()));
    }
}

#[test]
fn order_poly_examples() {
    let out = stdout(&chromix(&["order-poly", &fixture("chain2.poset")]));
    assert!(out.starts_with("omega: 1/2*k^2 + 1/2*k\ncomplement: 1/2*k^2 - 1/2*k\n"));
    let o = chromix(&["order-poly", &fixture("antichain2.poset")]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("omega: k^2\ncomplement: k^2\n"));
    let o = chromix(&["order-poly", &fixture("cyclic.poset")]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("antisymmetric"));
}

#[test]
fn verify_examples() {
    let o = chromix(&["verify", "--exhaustive", "-n", "3", "--kmax", "3", "--theorem", "weak"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("failures: 0"));
    let o = chromix(&["verify", "--exhaustive", "-n", "3", "--kmax", "3", "--theorem", "strong"]);
    assert!(stdout(&o).contains("universe: 64"));
    assert!(stdout(&o).contains("passed: 64"));
    let o = chromix(&["verify", "--exhaustive", "-n", "4", "--kmax", "3", "--theorem", "stanley-order"]);
    assert_eq!(code(&o), 0);
    let o = chromix(&["verify", "-n", "2", "--theorem", "arc-reversal", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], true);
    assert_eq!(v["failures"], serde_json::json!([]));
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(code(&chromix(&["verify", "-n", "5", "--theorem", "weak"])), 2);
    assert_eq!(code(&chromix(&["verify", "-n", "3", "--theorem", "nope"])), 2);
    assert_eq!(code(&chromix(&["poly"])), 2);
    assert_eq!(code(&chromix(&["poly", "/nonexistent/graph.txt"])), 2);
    assert_eq!(code(&chromix(&["frobnicate"])), 2);
    assert_eq!(code(&chromix(&["reciprocity", "--kmax", "0", &fixture("single_arc.txt")])), 2);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "edge a b\nedge c c\n").unwrap();
    let o = chromix(&["poly", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    let dot = dir.path().join("bad.dot");
    std::fs::write(&dot, "graph { a -- b [color=red]; }").unwrap();
    let o = chromix(&["poly", dot.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("attribute list"));
}

#[test]
fn reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_chromix"))
        .args(["poly", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"edge u v\narc v w\narc w u\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(stdout(&o).lines().next(), Some("1/6*k^3 + 1/2*k^2 - 2/3*k"));
}

#[test]
fn random_round_trip_through_files() {
    use rand::{rngs::StdRng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(5);
    let dir = tempfile::tempdir().unwrap();
    for i in 0..5 {
        let g = chromix::enumeration::random_mixed_graph(4, &mut rng);
        let path = dir.path().join(format!("g{i}.txt"));
        std::fs::write(&path, chromix_cli::parse::render_lines(&g)).unwrap();
        let first = stdout(&chromix(&["poly", path.to_str().unwrap()]));
        let want = chromix::weak_chromatic_polynomial(&g).to_string();
        assert_eq!(first.lines().next(), Some(want.as_str()), "{g}");
    }
}
