//! End-to-end tests of the binary: subcommand behavior, exit codes, and
//! JSON report validity against the shipped schema.

use std::process::{Command, Output, Stdio};

fn cospec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cospec"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn cospec_stdin(args: &[&str], stdin: &str) -> Output {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_cospec"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn schema() -> jsonschema::Validator {
    let text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/docs/report-schema.json"
    ))
    .expect("schema file ships with the crate");
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    jsonschema::validator_for(&doc).expect("schema compiles")
}

fn assert_valid_report(validator: &jsonschema::Validator, text: &str) -> serde_json::Value {
    let doc: serde_json::Value = serde_json::from_str(text).expect("valid JSON");
    let errors: Vec<String> = validator
        .iter_errors(&doc)
        .map(|e| format!("{e}"))
        .collect();
    assert!(errors.is_empty(), "schema violations: {errors:?}\nin {text}");
    doc
}

#[test]
fn construct_then_charpoly() {
    let out = cospec(&["construct", "double-star", "1", "4"]);
    assert!(out.status.success());
    let line = stdout(&out).trim().to_string();
    assert_eq!(line, "FqPA?");

    let out = cospec(&["charpoly", &line]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "x^7 - 6*x^5 + 4*x^3");
}

#[test]
fn charpoly_methods_agree_in_output() {
    for graph in ["P2(1,4)", "K(3,3)", "cycle(5)", "A(3)+2K1"] {
        let mut lines = Vec::new();
        for method in ["exact", "sachs", "schwenk"] {
            let out = cospec(&["charpoly", graph, "--method", method]);
            assert!(out.status.success());
            lines.push(stdout(&out).trim().to_string());
        }
        assert_eq!(lines[0], lines[1]);
        assert_eq!(lines[0], lines[2]);
    }
}

#[test]
fn ds_exit_codes() {
    let out = cospec(&["ds", "P2(1,5)"]);
    assert_eq!(out.status.code(), Some(0));

    let out = cospec(&["ds", "P2(1,6)"]);
    assert_eq!(out.status.code(), Some(10));
    let text = stdout(&out);
    assert!(text.contains("mates: 1"));
    assert!(text.contains("form_i"));
}

#[test]
fn usage_and_parse_and_limit_exit_codes() {
    let out = cospec(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));

    let out = cospec(&["charpoly", "this is not a graph"]);
    assert_eq!(out.status.code(), Some(3));

    let out = cospec(&["charpoly", "Bww"]);
    assert_eq!(out.status.code(), Some(3));

    // 17 vertices is past the exhaustive-search cap
    let out = cospec(&["mates", "P2(7,8)"]);
    assert_eq!(out.status.code(), Some(4));

    // sachs method is capped too
    let out = cospec(&["charpoly", "P2(12,12)", "--method", "sachs"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn stdin_accepts_graph6_lines() {
    let out = cospec_stdin(&["charpoly", "-"], "A_\nBw\n");
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines, vec!["x^2 - 1", "x^3 - 3*x - 2"]);
}

#[test]
fn json_reports_validate_against_schema() {
    let validator = schema();

    let out = cospec(&["charpoly", "P2(1,4)", "--roots", "--report", "json"]);
    assert!(out.status.success());
    let doc = assert_valid_report(&validator, &stdout(&out));
    assert_eq!(doc["result"]["polynomial"], "x^7 - 6*x^5 + 4*x^3");
    assert_eq!(doc["result"]["roots"].as_array().unwrap().len(), 7);

    let out = cospec(&["mates", "P2(1,4)", "--report", "json"]);
    assert!(out.status.success());
    let doc = assert_valid_report(&validator, &stdout(&out));
    assert_eq!(doc["result"]["ds"], serde_json::Value::Bool(false));
    assert_eq!(doc["result"]["mates"].as_array().unwrap().len(), 1);

    let out = cospec(&["ds", "P2(1,3)", "--report", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = assert_valid_report(&validator, &stdout(&out));
    assert_eq!(doc["result"]["ds"], serde_json::Value::Bool(true));

    let out = cospec(&["forbidden", "path(5)", "--report", "json"]);
    assert!(out.status.success());
    let doc = assert_valid_report(&validator, &stdout(&out));
    assert_eq!(doc["result"]["all_clear"], serde_json::Value::Bool(false));

    let out = cospec(&["decompose", "A(3)+2K1", "--report", "json"]);
    assert!(out.status.success());
    let doc = assert_valid_report(&validator, &stdout(&out));
    assert_eq!(doc["result"]["classification"], "form_i");
    assert_eq!(doc["result"]["isolated"], 2);
}

#[test]
fn text_reports_carry_the_same_numbers() {
    let json_out = cospec(&["mates", "P2(1,8)", "--report", "json", "--workers", "2"]);
    let text_out = cospec(&["mates", "P2(1,8)", "--report", "text", "--workers", "2"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&json_out)).unwrap();
    let text = stdout(&text_out);
    let mates = doc["result"]["mates"].as_array().unwrap();
    assert_eq!(mates.len(), 2);
    assert!(text.contains("mates: 2"));
    for mate in mates {
        assert!(text.contains(mate["graph6"].as_str().unwrap()));
    }
    assert!(text.contains(doc["result"]["target_polynomial"].as_str().unwrap()));
}

#[test]
fn construct_named_kinds() {
    let out = cospec(&["construct", "R"]);
    assert!(out.status.success());
    let r_line = stdout(&out).trim().to_string();
    let out = cospec(&["charpoly", &r_line]);
    assert_eq!(stdout(&out).trim(), "x^6 - 6*x^4 + 5*x^2 - 1");

    let out = cospec(&["construct", "star-mate", "2", "2"]);
    let line = stdout(&out).trim().to_string();
    let out = cospec(&["charpoly", &line]);
    // cospectral to the 4-leaf star
    assert_eq!(stdout(&out).trim(), "x^5 - 4*x^3");

    for args in [["construct", "A", "3"], ["construct", "B", "2"]] {
        let out = cospec(&args);
        assert!(out.status.success());
    }
}

#[test]
fn workers_env_variable_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_cospec"))
        .args(["mates", "P2(1,4)", "--report", "json"])
        .env("COSPEC_WORKERS", "3")
        .output()
        .unwrap();
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["workers"], 3);
}
