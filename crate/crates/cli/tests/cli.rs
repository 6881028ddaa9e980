use std::process::{Command, Output};

use serde_json::Value;

fn gspecht(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gspecht")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn tsv_rows(o: &Output) -> Vec<Vec<String>> {
    stdout(o).lines().skip(1).map(|l| l.split('\t').map(str::to_string).collect()).collect()
}

#[test]
fn tableaux_of_a_hook() {
    let o = gspecht(&["tableaux", "--e", "3", "--charge", "0", "--mu", "2,1"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("id\tfilling\tresidues\tdeg\tcodeg\tlength\tword\n"));
    let rows = tsv_rows(&o);
    assert_eq!(rows.len(), 2);
    let degrees: Vec<&str> = rows.iter().map(|r| r[3].as_str()).collect();
    assert_eq!(degrees, ["0", "1"]);
}

#[test]
fn tableaux_of_a_level_three_shape() {
    let o = gspecht(&["tableaux", "--mu", "3,1|_|4,2", "--e", "3", "--charge", "0,1,1"]);
    assert!(o.status.success());
    let rows = tsv_rows(&o);
    assert_eq!(rows[0][2], "0,1,2,2,1,2,0,1,0,1");
    assert_eq!(rows[0][5], "0");
}

#[test]
fn tableaux_of_the_empty_shape() {
    let o = gspecht(&["tableaux", "--e", "2", "--mu", ""]);
    assert!(o.status.success());
    let rows = tsv_rows(&o);
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0][3], "0");
}

#[test]
fn tableaux_as_json() {
    let o = gspecht(&["tableaux", "--e", "3", "--mu", "2,1", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["tableaux"][1]["word"], serde_json::json!([2]));
    assert_eq!(v["tableaux"][1]["codeg"], 0);
}

#[test]
fn malformed_shape_is_a_usage_error() {
    let o = gspecht(&["tableaux", "--e", "3", "--mu", "2,x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("position"));
    let o = gspecht(&["tableaux", "--e", "3", "--level", "2", "--charge", "0", "--mu", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn character_of_a_hook() {
    let o = gspecht(&["char", "--e", "3", "--charge", "0", "--mu", "2,1"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let expected = serde_json::json!([
        {"weight": [0, 1, 2], "poly": {"0": 1}},
        {"weight": [0, 2, 1], "poly": {"1": 1}},
    ]);
    assert_eq!(v["character"], expected);
    assert_eq!(v["total"], 2);
    assert_eq!(v["e"], 3);
}

#[test]
fn character_of_the_empty_shape() {
    let o = gspecht(&["char", "--e", "0", "--mu", ""]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["character"], serde_json::json!([{"weight": [], "poly": {"0": 1}}]));
}

#[test]
fn character_total_counts_tableaux() {
    let o = gspecht(&["char", "--e", "2", "--charge", "0,1", "--mu", "2,1|1"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = tsv_rows(&gspecht(&["tableaux", "--e", "2", "--charge", "0,1", "--mu", "2,1|1"]));
    assert_eq!(v["total"], rows.len());
}

#[test]
fn branching_tables() {
    let rows = tsv_rows(&gspecht(&["branch", "--e", "3", "--charge", "0", "--mu", "2,1"]));
    assert_eq!(rows[0][..4], ["(2,1,1)", "2", "2", "0"]);
    assert_eq!(rows[1][..4], ["(1,2,1)", "1", "1,1", "1"]);
    assert_eq!(rows[2], ["# identity", "pass"]);

    let rows = tsv_rows(&gspecht(&["branch", "--e", "3", "--mu", "1"]));
    assert_eq!(rows[0][2..4], ["(empty)", "0"]);

    let o = gspecht(&["branch", "--e", "3", "--mu", "4", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 1);
    assert_eq!(v["rows"][0]["shape"], "3");
    assert_eq!(v["identity_holds"], true);
}

#[test]
fn verify_all_suites_at_level_one() {
    let o = gspecht(&["verify", "--level", "1", "--e", "2", "--dmax", "4", "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], "gspecht/1");
    assert_eq!(v["passed"], true);
}

#[test]
fn verify_combinatorics_at_e_zero() {
    let o = gspecht(&["verify", "--suite", "combinatorics", "--e", "0", "--dmax", "7"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn e_one_is_a_usage_error() {
    let o = gspecht(&["verify", "--level", "1", "--e", "1", "--dmax", "3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = gspecht(&["verify", "--e", "0", "--dmax", "3", "--suite", "hecke"]);
    assert_eq!(o.status.code(), Some(2));
    let o = gspecht(&["verify", "--e", "3", "--p", "11", "--dmax", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn resource_bound_exits_two_with_partial_report() {
    let dir = std::env::temp_dir().join(format!("gspecht-partial-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o = gspecht(&[
        "verify", "--e", "3", "--dmax", "6", "--suite", "hecke", "--max-dim", "100", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["passed"], false);
    assert!(v["runs"][0]["error"].is_string());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_independent_of_thread_count() {
    let args = ["verify", "--e", "3", "--level", "2", "--random-charges", "3", "--dmax", "3", "--seed", "5"];
    let runs: Vec<Output> = ["1", "3"]
        .iter()
        .map(|n| Command::new(env!("CARGO_BIN_EXE_gspecht")).args(args).env("GSPECHT_THREADS", n).output().unwrap())
        .collect();
    assert_eq!(runs[0].status.code(), Some(0));
    assert_eq!(runs[0].stdout, runs[1].stdout);
}

#[test]
fn json_round_trips() {
    for args in [
        vec!["verify", "--e", "2", "--dmax", "3"],
        vec!["char", "--e", "2", "--charge", "0,1", "--mu", "2|1"],
    ] {
        let text = stdout(&gspecht(&args));
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", text);
    }
}
