use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn lcalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lcalg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = lcalg(&full);
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", stdout(&o)))
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn table_of_complex_numbers() {
    let o = lcalg(&["table", "C", "--style", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), ",1,e1\n1,1,e1\ne1,e1,-1\n");
}

#[test]
fn gen_round_trips_through_files() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["O", "TO", "TS"] {
        let file = dir.path().join(format!("{name}.json"));
        let o = lcalg(&["--format", "json", "gen", name, "--out", path_str(&file)]);
        assert_eq!(o.status.code(), Some(0), "{name}");
        let from_file = json(&["table", path_str(&file)]);
        let from_name = json(&["table", name]);
        assert_eq!(from_file, from_name, "{name}");
    }
}

#[test]
fn gen_ts_then_classify3() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("a.json");
    let o = lcalg(&["--format", "json", "gen", "--ts", "1/2", "3", "-o", path_str(&file)]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&["classify3", path_str(&file)]);
    assert_eq!(v["t"], "1/2");
    assert_eq!(v["s"], "3");
}

#[test]
fn check_exit_codes() {
    assert_eq!(lcalg(&["check", "O"]).status.code(), Some(0));
    // S is not alternative
    assert_eq!(lcalg(&["check", "S", "--props", "alt"]).status.code(), Some(1));
    assert_eq!(lcalg(&["check", "S", "--props", "lc"]).status.code(), Some(0));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(lcalg(&["check", "Zork"]).status.code(), Some(2));
    assert_eq!(lcalg(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(lcalg(&["ann", "TO", "f1 - g4"]).status.code(), Some(2));
    assert_eq!(lcalg(&["check", "O", "--props", "pretty"]).status.code(), Some(2));
}

#[test]
fn malformed_files_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{not json").unwrap();
    assert_eq!(lcalg(&["table", path_str(&bad)]).status.code(), Some(3));

    let ragged = dir.path().join("ragged.json");
    std::fs::write(&ragged, r#"{"dim": 2, "labels": ["1", "e1"], "constants": [["1"]]}"#).unwrap();
    assert_eq!(lcalg(&["table", path_str(&ragged)]).status.code(), Some(3));

    let missing = dir.path().join("missing.json");
    assert_eq!(lcalg(&["table", path_str(&missing)]).status.code(), Some(3));
}

#[test]
fn annihilator_in_tilde_octonions() {
    let v = json(&["ann", "TO", "f1 - f4"]);
    assert_eq!(v["dim"], 2);
}

#[test]
fn recognize_and_classify_super() {
    assert_eq!(json(&["recognize", "H"])["tag"], "H");
    assert_eq!(json(&["classify-super", "TS"])["tag"], "TS");
    let o = lcalg(&["recognize", "S"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn four_dimensional_commands() {
    let v = json(&["classify4", "--T", "1,0,0;0,-1,0;0,0,1", "--u", "0,0,0"]);
    assert_eq!(v["type"], "hyperboloid");
    assert_eq!(v["division"]["division"], false);
    let v = json(&["division4", "--T", "2,1,0;-1,3,0;0,0,1", "--u", "1,1,1"]);
    assert_eq!(v["division"], true);

    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("p.json");
    std::fs::write(&p, r#"{"T": [["1","0","0"],["0","1","0"],["0","0","1"]], "u": ["0","0","0"]}"#).unwrap();
    let v = json(&["iso4", "--a", path_str(&p), "--b", "H"]);
    assert_eq!(v["isomorphic"], true);
    let v = json(&["iso4", "--a", path_str(&p), "--b", "A2", "--tol", "1e-9"]);
    assert_eq!(v["isomorphic"], true);
}

#[test]
fn embedding_and_subalgebras() {
    assert_eq!(json(&["embed-check"])["homomorphism"], true);
    let v = json(&["subalg", "O", "e1", "e2"]);
    assert_eq!(v["generated_dim"], 4);
    let v = json(&["subalg", "TS", "f1 + f14", "f3 + f12", "f6 - f9", "f7 - f8"]);
    assert_eq!(v["span_is_subalgebra"], true);
    assert_eq!(v["generated_dim"], 5);
}

#[test]
fn seeded_output_is_deterministic() {
    let a = lcalg(&["--seed", "7", "zerodiv", "S"]);
    let b = lcalg(&["--seed", "7", "zerodiv", "S"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_paper_single_claim() {
    let v = json(&["verify-paper", "--claim", "01-tables"]);
    assert_eq!(v["all_pass"], true);
    assert_eq!(v["claims"].as_array().unwrap().len(), 1);
    assert_eq!(lcalg(&["verify-paper", "--claim", "99"]).status.code(), Some(2));
}
