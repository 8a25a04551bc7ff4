//! End-to-end tests of the binary: exit codes, output stability, and the
//! golden rank-4 table.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_a1cell"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn classify_examples() {
    let out = run(&["classify", "A", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("classification: KM2"));

    let out = run(&["classify", "C", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("classification: KMW2"));
    assert!(text.contains("witness root: 3"));

    let out = run(&["classify", "G", "2"]);
    assert!(stdout(&out).contains("classification: KM2"));

    // B2 normalizes to C2 and is symplectic.
    let out = run(&["classify", "B", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("type C2"));
    assert!(stdout(&out).contains("classification: KMW2"));
}

#[test]
fn homology_examples() {
    let out = run(&["homology", "group", "A", "2", "--real"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("real H_1 = Z/2"));

    let out = run(&["homology", "group", "C", "2", "--milnor"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("milnor H_1 = Z"));

    let out = run(&["homology", "pn", "3", "--real"]);
    let text = stdout(&out);
    for line in [
        "real H_0 = Z",
        "real H_1 = Z/2",
        "real H_2 = 0",
        "real H_3 = Z",
    ] {
        assert!(text.contains(line), "missing {line:?} in {text}");
    }

    let out = run(&["homology", "punctured", "2", "--real"]);
    let text = stdout(&out);
    assert!(text.contains("real H_0 = Z"));
    assert!(text.contains("real H_1 = 0"));
    assert!(text.contains("real H_2 = Z"));

    let out = run(&["homology", "flag", "C", "2"]);
    assert!(stdout(&out).contains("symbolic H_1 = KMW_1 + Gm"));

    // complexTop: everything of positive weight vanishes.
    let out = run(&["homology", "group", "A", "3", "--complex"]);
    assert!(stdout(&out).contains("complexTop H_1 = 0"));
}

#[test]
fn exit_code_usage_errors() {
    for args in [
        &["classify", "B", "1"][..],
        &["classify", "X", "2"],
        &["classify", "E", "5"],
        &["homology", "pn", "0"],
        &["pi3", "A", "1"],
        &["table", "--max-rank", "9"],
        &["table", "--max-rank", "0"],
        &["classify", "A", "2", "--signs", "tau9=1"],
        &["classify", "A", "2", "--signs", "tau1=0"],
        &["classify", "A", "2", "--signs", "garbage"],
        &["homology", "group", "A", "2", "--real", "--milnor"],
    ] {
        let out = run(args);
        assert_eq!(
            out.status.code(),
            Some(2),
            "args {args:?}: stderr {}",
            stderr(&out)
        );
    }
}

#[test]
fn exit_code_internal_error() {
    let out = run(&["pi3", "A", "2", "--corrupt"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("internal error"));
    assert!(stderr(&out).contains("composite"));
}

#[test]
fn signs_are_accepted_and_results_stable() {
    let plus = run(&["homology", "group", "A", "2", "--real", "--signs", "tau1=1"]);
    let minus = run(&["homology", "group", "A", "2", "--real", "--signs", "tau1=-1"]);
    assert!(plus.status.success() && minus.status.success());
    assert!(stdout(&plus).contains("real H_1 = Z/2"));
    assert!(stdout(&minus).contains("real H_1 = Z/2"));
}

#[test]
fn json_reports_are_byte_stable() {
    let a = run(&["table", "--max-rank", "3", "--json"]);
    let b = run(&["table", "--max-rank", "3", "--json", "--sequential"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(stdout(&a), stdout(&b), "parallel and sequential runs differ");

    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["schemaVersion"], 1);
    assert_eq!(v["command"], "table");
    assert_eq!(v["results"]["rows"].as_array().unwrap().len(), 7);
}

#[test]
fn golden_rank4_table() {
    let out = run(&["table", "--max-rank", "4", "--json"]);
    assert!(out.status.success());
    let golden = include_str!("golden/table_rank4.json");
    assert_eq!(
        stdout(&out),
        golden,
        "rank-4 table JSON deviates from the golden file"
    );
}

#[test]
fn pi3_report() {
    let out = run(&["pi3", "A", "2", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["results"]["middle"]["display"], "Z");
    assert_eq!(v["results"]["leftInjective"], true);
    assert_eq!(v["results"]["leftRank"], 2);
    assert_eq!(v["results"]["cells"], 2);
}

#[test]
fn classify_json_shape() {
    let out = run(&["classify", "C", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["results"]["classification"], "KMW2");
    assert_eq!(v["results"]["witnessRoot"], 3);
    assert_eq!(v["results"]["h1Formula"], "M_{-2}(k)");
    assert_eq!(v["inputs"]["type"], "C3");
    assert!(v["results"]["trace"].as_array().unwrap().len() >= 5);
    assert!(v["provenance"].as_array().unwrap().len() >= 2);
}
