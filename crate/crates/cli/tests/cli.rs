//! The `lad` binary: outputs and exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn lad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lad")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn enumerate_degree_three_lists_six_actions() {
    let o = lad(&["enumerate", "--degree", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 6);
}

#[test]
fn enumerate_csv_has_header_and_rows() {
    let o = lad(&["enumerate", "--degree", "4", "--csv"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "degree,local_action,pairing,lpc,fixed_end,quotient,plus_local,flags");
    assert_eq!(lines.count(), 19);
}

#[test]
fn analyze_focal_file() {
    let f = data("focal_s2.json");
    let o = lad(&["analyze", arg(&f), "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["action"]["action_type"], "Focal");
    assert_eq!(v["action"]["fixed_end_count"], 1);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["digest", "validation", "action", "quotient", "simplicity"]);
}

#[test]
fn analyze_csv_and_ball_stats() {
    let f = data("sym3.json");
    let text = stdout(&lad(&["analyze", arg(&f), "--format", "csv", "--radius", "3"]));
    let row = text.lines().nth(1).unwrap();
    assert!(row.ends_with(",3,3072"), "{row}");
}

#[test]
fn unknown_format_is_a_usage_error() {
    let f = data("sym3.json");
    assert_eq!(lad(&["analyze", arg(&f), "--format", "xml"]).status.code(), Some(2));
}

#[test]
fn invalid_diagram_exits_one_with_violation() {
    let f = data("not_an_orbit.json");
    let o = lad(&["validate", arg(&f)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not an orbit"));
    assert!(o.stdout.is_empty());
}

#[test]
fn malformed_input_exits_one() {
    let f = data("star_sym3.json");
    assert_eq!(lad(&["validate", arg(&f)]).status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(lad(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(lad(&["census", "--max", "7"]).status.code(), Some(2));
    assert_eq!(lad(&["enumerate"]).status.code(), Some(2));
}

#[test]
fn budget_exceeded_exits_three() {
    let f = data("sym3.json");
    let o = lad(&["ball", arg(&f), "--radius", "12", "--count", "--budget", "50"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn ball_counters_agree() {
    let f = data("sym3.json");
    for counter in ["formula", "backtrack"] {
        let o = lad(&["ball", arg(&f), "--radius", "2", "--count", "--counter", counter]);
        assert_eq!(stdout(&o), "48\n");
    }
}

#[test]
fn ball_text_header() {
    let f = data("focal_s2.json");
    let text = stdout(&lad(&["ball", arg(&f), "--radius", "2", "--seed", "5"]));
    assert!(text.starts_with("ball base=v radius=2 vertices="), "{text}");
}

#[test]
fn iso_reports_both_outcomes() {
    let (a, b, c) = (data("focal_s2.json"), data("focal_s2_relabelled.json"), data("sym3.json"));
    let yes = lad(&["iso", arg(&a), arg(&b)]);
    assert!(yes.status.success() && stdout(&yes).starts_with("isomorphic"));
    let no = lad(&["iso", arg(&a), arg(&c)]);
    assert!(no.status.success());
    assert_eq!(stdout(&no), "not isomorphic\n");
}

#[test]
fn combine_builds_a_simple_star() {
    let spec = data("star_sym3.json");
    let o = lad(&["combine", arg(&spec)]);
    assert!(o.status.success());
    let dir = std::env::temp_dir().join(format!("lad-star-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("star.json");
    std::fs::write(&file, &o.stdout).unwrap();
    let v: serde_json::Value =
        serde_json::from_slice(&lad(&["analyze", arg(&file), "--format", "json"]).stdout).unwrap();
    assert_eq!(v["simplicity"]["simple"], true);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn quotient_expression_and_diagram() {
    let f = data("free_edge.json");
    assert_eq!(stdout(&lad(&["quotient", arg(&f)])), "C_2\n");
    let o = lad(&["quotient", "--diagram", arg(&data("sym3.json"))]);
    assert!(stdout(&o).contains("\"vertices\""));
}

#[test]
fn census_counts_table() {
    let text = stdout(&lad(&["census", "--min", "2", "--max", "5"]));
    let vt: Vec<&str> = text.lines().skip(1).map(|l| l.split_whitespace().last().unwrap()).collect();
    assert_eq!(vt, ["3", "6", "19", "40"]);
}
