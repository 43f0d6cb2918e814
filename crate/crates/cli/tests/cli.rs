//! End-to-end runs of the `g2` binary.

use std::process::{Command, Output};

fn g2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g2"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn equiv_reports_through_the_exit_status() {
    let yes = g2(&["equiv", "1 0", "1"]);
    assert_eq!(yes.status.code(), Some(0));
    assert_eq!(stdout(&yes), "true\n");
    let no = g2(&["equiv", "1 2", "2 1"]);
    assert_eq!(no.status.code(), Some(1));
    assert_eq!(stdout(&no), "false\n");
}

#[test]
fn parse_errors_name_the_token() {
    let o = g2(&["insert", "1 7 2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("`7`"));
    let o = g2(&["canonical", "x", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("'x'"));
}

#[test]
fn insert_empty_word() {
    let o = g2(&["insert", ""]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "P:\n(empty)\nQ: (empty)\n");
    let o = g2(&["insert", "", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["q"], serde_json::json!([]));
}

#[test]
fn canonical_csv_for_the_second_fundamental_module() {
    let o = g2(&["canonical", "0", "1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 23);
    assert!(lines.iter().all(|l| l.split(',').count() == 15));
    assert!(lines.contains(&"1 -1,0,0,0,0,0,0,0,0,q^3,0,0,0,0,0"));
    assert_eq!(text, stdout(&g2(&["canonical", "0", "1", "--csv"])));
}

#[test]
fn canonical_json_mirrors_the_matrix() {
    let o = g2(&["canonical", "1", "0", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["shape"], serde_json::json!([1, 0]));
    assert_eq!(v["entries"].as_array().unwrap().len(), 7);
    assert_eq!(v["entries"][0][0], serde_json::json!([[0, 1]]));
}

#[test]
fn component_formats() {
    let text = stdout(&g2(&["component", "1 2"]));
    assert!(text.starts_with("highest weight vertex: 1 2\nweight: (0, 1)\nvertices: 14\n"));
    let dot = stdout(&g2(&["component", "1 0", "--dot"]));
    assert!(dot.starts_with("digraph"));
    let json: serde_json::Value =
        serde_json::from_slice(&g2(&["component", "1 1", "--json"]).stdout).unwrap();
    assert_eq!(json["vertices"].as_array().unwrap().len(), 27);
    assert_eq!(
        g2(&["component", "1", "--dot", "--json"]).status.code(),
        Some(2)
    );
}

#[test]
fn tableaux_are_listed_in_order() {
    let text = stdout(&g2(&["tableaux", "1", "1"]));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 64);
    assert_eq!(lines[0], "1 1 2");
}

#[test]
fn selftest_passes() {
    let o = g2(&["selftest", "--max-len", "3"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAILED"));
}

#[test]
fn output_is_deterministic() {
    let a = g2(&["canonical", "2", "0"]);
    let b = g2(&["canonical", "2", "0"]);
    assert_eq!(a.stdout, b.stdout);
}
