use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn ccent(args: &[&str], stdin: &str) -> (i32, Value) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ccent"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let Output { status, stdout, .. } = child.wait_with_output().unwrap();
    let text = String::from_utf8(stdout).unwrap();
    let value = serde_json::from_str(&text).unwrap_or(Value::Null);
    (status.code().unwrap_or(-1), value)
}

const P3: &str = "3 2\n0 1\n1 2\n";
const STAR: &str = "# star with four leaves\n5 4\n0 1\n0 2\n0 3\n0 4\n";

#[test]
fn centrality_on_path() {
    let (code, v) = ccent(&["centrality", "-", "--measure", "closeness"], P3);
    assert_eq!(code, 0);
    assert_eq!(v["scores"], serde_json::json!(["1/3", "1/2", "1/3"]));
    assert_eq!(v["ranking"], serde_json::json!([[1], [0, 2]]));
}

#[test]
fn decay_takes_delta() {
    let (code, v) = ccent(&["centrality", "-", "--measure", "decay", "--delta", "0.5"], P3);
    assert_eq!(code, 0);
    assert_eq!(v["params"]["delta"], "1/2");
    assert_eq!(v["scores"][1], "1");
}

#[test]
fn condorcet_report_on_star() {
    let (code, v) = ccent(&["condorcet", "-"], STAR);
    assert_eq!(code, 0);
    assert_eq!(v["winner"], 0);
    assert_eq!(v["consistency"]["closeness"], "consistent");
    assert_eq!(v["consistency"]["rwc"], "consistent");
}

#[test]
fn hitting_single_pair() {
    let (code, v) = ccent(&["hitting", "-", "--from", "0", "--to", "2"], P3);
    assert_eq!(code, 0);
    assert_eq!(v["hitting_time"], "4");
    let (code, v) = ccent(&["hitting", "-"], P3);
    assert_eq!(code, 0);
    assert_eq!(v[1][0], "3");
}

#[test]
fn fixture_emits_verified_graph() {
    let (code, v) = ccent(&["fixture", "fig1"], "");
    assert_eq!(code, 0);
    assert_eq!(v["verified"], true);
    assert_eq!(v["graph"]["n"], 13);
    assert_eq!(v["winner"], v["marks"]["v"]);
    let (code, v) = ccent(&["fixture", "fig3", "--emit", "edges"], "");
    assert_eq!(code, 0);
    assert!(v["edge_list"].as_str().unwrap().starts_with("11 10\n"));
}

#[test]
fn verify_small_suites() {
    let (code, v) = ccent(&["verify", "--trees", "5"], "");
    assert_eq!(code, 0);
    assert_eq!(v["instances"], 1 + 1 + 3 + 16 + 125);
    let (code, v) = ccent(&["verify", "--graphs", "--samples", "300", "--n-max", "12", "--seed", "4"], "");
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["suite"], "graphs");
}

#[test]
fn search_reports_witness_with_exit_one() {
    let args = ["search", "--measure", "degree", "--axiom", "condorcet-consistency", "--budget", "3000", "--seed", "3"];
    let (code, v) = ccent(&args, "");
    assert_eq!(code, 1);
    assert!(v["witness"]["graph"]["n"].as_u64().unwrap() >= 4);
    let args = ["search", "--measure", "closeness", "--axiom", "cc", "--generator", "graphs", "--budget", "200"];
    let (code, v) = ccent(&args, "");
    assert_eq!(code, 0);
    assert_eq!(v["witness"], Value::Null);
}

#[test]
fn canonical_and_reduction() {
    let (code, v) = ccent(&["canonical", "--sum", "28", "--n", "11"], "");
    assert_eq!(code, 0);
    assert_eq!(v["list"], serde_json::json!([5, 1, 2, 1, 1, 1]));
    let (code, v) = ccent(&["canonical", "--list", "4,1,2,4"], "");
    assert_eq!(code, 0);
    assert_eq!(v["trace"], serde_json::json!(["(4,2,1,3,1)", "(5,1,1,2,2)", "(5,1,2,1,1,1)"]));
}

#[test]
fn gadgets_carry_their_lists() {
    let (code, v) = ccent(&["gadget", "--kind", "shift", "--i", "2", "--j", "4"], "");
    assert_eq!(code, 0);
    assert_eq!(v["realized_u0"], serde_json::json!([2, 3, 2, 3]));
    assert_eq!(v["realized_v0"], serde_json::json!([3, 2, 2, 2, 1]));
    let (code, v) = ccent(&["gadget", "--kind", "minimal", "--sum", "28", "--n", "11"], "");
    assert_eq!(code, 0);
    assert_eq!(v["expected_u0"], v["realized_u0"]);
    let args = ["gadget", "--kind", "shift-ext", "--list", "3,5,2,3,2", "--i", "2", "--j", "4"];
    let (code, v) = ccent(&args, "");
    assert_eq!(code, 0);
    assert_eq!(v["realized_v0"], serde_json::json!([4, 4, 2, 2, 3]));
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(ccent(&["centrality", "-"], "3 2\n0 1\n").0, 2);
    assert_eq!(ccent(&["centrality", "-", "--measure", "pagerank"], P3).0, 2);
    assert_eq!(ccent(&["fixture", "fig42"], "").0, 2);
    assert_eq!(ccent(&["canonical", "--sum", "3", "--n", "5"], "").0, 2);
    assert_eq!(ccent(&["gadget", "--kind", "shift", "--i", "2"], "").0, 2);
    assert_eq!(ccent(&["verify"], "").0, 2);
    assert_eq!(ccent(&["condorcet", "-"], "4 2\n0 1\n2 3\n").0, 2);
}
