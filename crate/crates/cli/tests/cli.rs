use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn cycdesc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cycdesc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = cycdesc(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn first_line(args: &[&str]) -> String {
    stdout(args).lines().next().unwrap_or_default().to_string()
}

fn validate(schema: &str, args: &[&str]) -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schemas").join(schema);
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema).expect("schema compiles");
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let value: Value = serde_json::from_str(&stdout(&full)).expect("valid json");
    if let Err(errors) = compiled.validate(&value) {
        let msgs: Vec<String> = errors.map(|e| e.to_string()).collect();
        panic!("{args:?} does not match {schema}: {msgs:?}");
    }
    value
}

#[test]
fn documented_examples() {
    assert_eq!(first_line(&["map", "phi", "--cycle", "(3,1,4,2,5)"]), "3 4 1 2");
    let psi = stdout(&["map", "psi", "--perm", "1 2 3"]);
    assert_eq!(psi.lines().next(), Some("2 3 4 1"));
    assert_eq!(psi.lines().nth(2), Some("(1,2,3,4)"));
    assert_eq!(first_line(&["map", "t0", "--word", "0 1 2"]), "1 2 3");
    assert_eq!(first_line(&["map", "u", "--word", "4 3 1"]), "3 2 1");
    assert_eq!(
        first_line(&[
            "transfer", "--perm", "3 4 1 2 5 9 11 12 6 7 8 10", "--from", "2,8", "--to", "4,6"
        ]),
        "3 7 8 9 10 11 1 2 4 5 6 12"
    );
    assert_eq!(first_line(&["count", "--n", "4", "--subset", "2", "--mode", "exact"]), "5");
    assert_eq!(first_line(&["count", "--n", "4", "--subset", "2", "--mode", "contained"]), "6");
    assert_eq!(first_line(&["count", "--n", "3", "--subset", ""]), "1");
    assert_eq!(stdout(&["table", "--n", "1"]), "(1,2)\t2 1\t1\t{}\n");
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| cycdesc(args).status.code();
    assert_eq!(code(&["verify", "--suite", "bij_roundtrip", "--n", "4"]), Some(0));
    assert_eq!(code(&["verify", "--suite", "nope"]), Some(2));
    assert_eq!(code(&["map", "phi", "--cycle", "(1,2)(3)"]), Some(2));
    assert_eq!(code(&["map", "phi", "--perm", "1 1 2"]), Some(2));
    assert_eq!(code(&["map", "t0", "--word", "4 3 1"]), Some(2));
    assert_eq!(code(&["map", "cyclesu", "--perm", "2 3 4 1"]), Some(2));
    assert_eq!(code(&["map", "cyclesu", "--perm", "2 3 4 1", "--m", "5"]), Some(2));
    assert_eq!(code(&["table", "--n", "9"]), Some(2));
    assert_eq!(code(&["transfer", "--perm", "2 1 3", "--from", "1", "--to", "1,2"]), Some(2));
    assert_eq!(code(&["bogus"]), Some(2));
    let err = cycdesc(&["table", "--n", "9"]);
    assert!(String::from_utf8_lossy(&err.stderr).contains("n <= 8"));
}

#[test]
fn json_outputs_match_schemas() {
    let v = validate("map.json", &["--trace", "map", "phi", "--cycle", "(3,1,4,2,5)"]);
    assert_eq!(v["one_line"], serde_json::json!([3, 4, 1, 2]));
    validate("map.json", &["--trace", "map", "psi", "--perm", "3 4 1 2"]);
    validate("map.json", &["map", "cyclesu", "--perm", "2 3 4 1", "--m", "2"]);
    let t = validate("table.json", &["table", "--n", "4"]);
    assert_eq!(t["rows"].as_array().unwrap().len(), 24);
    let r = validate("verify.json", &["verify", "--suite", "bij_roundtrip", "--n", "6"]);
    assert_eq!(r["checked"], 720);
    let all = validate("verify.json", &["verify", "--suite", "all", "--n", "4"]);
    assert_eq!(all.as_array().unwrap().len(), 12);
    let c = validate("count.json", &["count", "--n", "30", "--subset", "10,20", "--mode", "contained"]);
    assert_eq!(c["count"], "5550996791340");
    let x = validate(
        "transfer.json",
        &["transfer", "--perm", "3 4 1 2 5 9 11 12 6 7 8 10", "--from", "2,8", "--to", "4,6", "--show-necklaces"],
    );
    assert_eq!(x["necklaces"], "(2,3)(2,3)(3)(3,1)(3,1,3,1,1)");
}

#[test]
fn table_json_agrees_with_text() {
    let text = stdout(&["table", "--n", "4"]);
    let json: Value = serde_json::from_str(&stdout(&["--format", "json", "table", "--n", "4"])).unwrap();
    for (line, row) in text.lines().zip(json["rows"].as_array().unwrap()) {
        let cols: Vec<&str> = line.split('\t').collect();
        assert_eq!(cols[0], row["cycle"]);
        let words = |v: &Value| {
            v.as_array()
                .unwrap()
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        assert_eq!(cols[1], words(&row["pi"]));
        assert_eq!(cols[2], words(&row["sigma"]));
    }
}

#[test]
fn text_outputs_reparse() {
    let out = stdout(&["map", "phi", "--cycle", "(3,6,1,5,2,4,7)"]);
    let lines: Vec<&str> = out.lines().collect();
    let one_line = lines[0];
    for (flag, text) in [("--perm", lines[1]), ("--cycle", lines[2])] {
        let back = stdout(&["map", "psi", flag, text]);
        assert_eq!(back.lines().nth(2), Some("(3,6,1,5,2,4,7)"), "{flag} {text}");
    }
    // ψ output feeds back into φ in both notations
    let back = stdout(&["map", "psi", "--perm", one_line]);
    let back: Vec<&str> = back.lines().collect();
    for (flag, text) in [("--perm", back[0]), ("--perm", back[1]), ("--cycle", back[2])] {
        assert_eq!(first_line(&["map", "phi", flag, text]), one_line);
    }
    // table rows parse as (cycle, one-line, image, descent set)
    for row in stdout(&["table", "--n", "3"]).lines() {
        let cols: Vec<&str> = row.split('\t').collect();
        assert_eq!(first_line(&["map", "phi", "--cycle", cols[0]]), cols[2]);
        assert_eq!(first_line(&["map", "phi", "--perm", cols[1]]), cols[2]);
        let n = cols[2].split(' ').count().to_string();
        first_line(&["count", "--n", &n, "--subset", cols[3]]);
    }
    // transfer output transfers back
    let sigma = first_line(&["transfer", "--perm", "3 4 1 2 5 9 11 12 6 7 8 10", "--from", "2,8", "--to", "2,6"]);
    assert_eq!(sigma, "7 8 5 9 10 11 1 2 3 4 6 12");
    assert_eq!(
        first_line(&["transfer", "--perm", &sigma, "--from", "2,6", "--to", "2,8"]),
        "3 4 1 2 5 9 11 12 6 7 8 10"
    );
}

#[test]
fn trace_is_text_after_result() {
    let out = stdout(&["--trace", "map", "phi", "--cycle", "(3,1,4,2,5)"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[..3], ["3 4 1 2", "3 4 · 1 2", "(3,1)(4,2)"]);
    assert!(lines[3..].iter().all(|l| l.starts_with("cycle ")));
}

#[test]
fn verify_reports_in_text() {
    let out = stdout(&["--jobs", "2", "verify", "--suite", "cor_biju", "--n", "5"]);
    assert_eq!(out, out.lines().next().map(|l| format!("{l}\n")).unwrap());
    assert!(out.starts_with("PASS cor_biju n=5 checked=120 failures=0"));
}
