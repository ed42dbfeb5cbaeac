//! End-to-end checks of the command-line surface: flags, formats, exit
//! codes.

use std::process::{Command, Output};

fn bcrystal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bcrystal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn check_member() {
    let out = bcrystal(&["check", "--cartan", "A3", "--tuple", "2,4,0,5,1,3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "member");

    let out = bcrystal(&["check", "--cartan", "A3", "--tuple", "0,1,0,0,0,0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "not a member");

    let out = bcrystal(&[
        "check",
        "--element",
        r#"{"cartan":"A3","entries":[[1,3,5],[2,2,4],[1,2,1],[1,1,3],[3,1,2]]}"#,
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("\"member\":true"));
}

#[test]
fn apply_word_and_null_exit() {
    let out = bcrystal(&[
        "apply",
        "--op",
        "e1",
        "--cartan",
        "A3",
        "--tuple",
        "2,4,0,5,1,3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "1,4,0,5,1,3");

    // a word prints each intermediate element
    let out = bcrystal(&[
        "apply",
        "--op",
        "f1,e2,f3*",
        "--cartan",
        "A3",
        "--tuple",
        "2,4,0,5,1,3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<String> = stdout(&out).lines().map(str::to_string).collect();
    assert_eq!(lines, ["2,4,0,5,1,4", "2,3,0,5,1,4", "2,3,0,6,1,4"]);

    // null raising aborts with exit code 2
    let out = bcrystal(&[
        "apply",
        "--op",
        "e2*",
        "--cartan",
        "A3",
        "--tuple",
        "2,4,0,5,1,3",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invalid_input_exits_one() {
    let out = bcrystal(&["check", "--cartan", "C3", "--tuple", "1"]);
    assert_eq!(out.status.code(), Some(1));

    let out = bcrystal(&[
        "apply",
        "--op",
        "f9",
        "--cartan",
        "A3",
        "--tuple",
        "0,0,0,0,0,0",
    ]);
    assert_eq!(out.status.code(), Some(1));

    let out = bcrystal(&["verify", "--suite", "bogus", "--cartan", "A2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn tableau_tokens() {
    let out = bcrystal(&["tableau", "--cartan", "B3", "--i", "3", "--star"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("∂*[1,3] 2∂*[2,2] 2∂*[3,1]"));
    assert!(text.contains("∂*[3,3]"));
}

#[test]
fn diamond_sum_and_render() {
    let out = bcrystal(&[
        "diamond",
        "--at",
        "2,1",
        "--cartan",
        "A3",
        "--tuple",
        "2,4,0,5,1,3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "-2");

    let out = bcrystal(&[
        "diamond",
        "--at",
        "1,3",
        "--star",
        "--cartan",
        "A3",
        "--tuple",
        "2,4,0,5,1,3",
        "--render",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("4\n"));
    assert!(text.contains("[5]"));
}

#[test]
fn convert_both_ways() {
    let out = bcrystal(&[
        "convert",
        "--from",
        "pbw",
        "--to",
        "poly",
        "--cartan",
        "A3",
        "--tuple",
        "1,2,2,1,0,3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "2,4,0,5,1,3");

    let out = bcrystal(&[
        "convert",
        "--from",
        "poly",
        "--to",
        "pbw",
        "--cartan",
        "A3",
        "--tuple",
        "2,4,0,5,1,3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "1,2,2,1,0,3");
}

#[test]
fn extended_word() {
    let element = r#"{"cartan":"A3","slots":{"0":[2,4,0,5,1,3],"1":[0,2,1,3,1,2]}}"#;
    let out = bcrystal(&["extended", "--op", "E(1,0)", "--element", element]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "(0,2,1,3,1,3) _(2,4,0,5,1,3)_");

    let out = bcrystal(&[
        "extended",
        "--op",
        "F(1,0),E(1,0)",
        "--element",
        element,
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<String> = stdout(&out).lines().map(str::to_string).collect();
    assert_eq!(lines.len(), 2);
    // E undoes F, landing back on the input
    assert!(lines[1].contains("\"0\":[2,4,0,5,1,3]"));
    assert!(lines[1].contains("\"1\":[0,2,1,3,1,2]"));
}

#[test]
fn verify_reports_json() {
    let out = bcrystal(&[
        "verify",
        "--suite",
        "bicrystal",
        "--cartan",
        "A2",
        "--depth",
        "4",
        "--seed",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("\"suite\":\"bicrystal\""));
    assert!(text.contains("\"violations\":[]"));
}

#[test]
fn graph_formats_agree() {
    // 7 vertices over heights 0..=2; lowering edges stay inside the slice:
    // 2 out of the top plus 4 out of height 1
    let dot = bcrystal(&["graph", "--cartan", "A2", "--depth", "2"]);
    assert_eq!(dot.status.code(), Some(0));
    let dot_text = stdout(&dot);
    assert!(dot_text.starts_with("digraph"));
    assert_eq!(dot_text.matches("->").count(), 6);

    let json = bcrystal(&["graph", "--cartan", "A2", "--depth", "2", "--json"]);
    let json_text = stdout(&json);
    // same edge count in both formats
    assert_eq!(json_text.matches("\"from\"").count(), 6);
}
