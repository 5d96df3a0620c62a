use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

const CENSUS: &str = include_str!("../../core/data/census.json");

fn whitten(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_whitten"))
        .args(args)
        .env_remove("WHITTEN_CENSUS")
        .output()
        .expect("run whitten")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn group_counts() {
    let o = whitten(&["group", "--mu", "2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "order 16\nsubgroups 35\nconjugacy classes 27\n");

    let o = whitten(&["group", "--mu", "3", "--subgroups", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["order"], 96);
    assert_eq!(v["subgroups"], 420);
    assert!(v.get("conjugacy_classes").is_none());
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["group", "--mu", "9"][..],
        &["group", "--mu", "5"],
        &["stabilizer", "--triple", "1,2"],
        &["stabilizer", "--triple", "1,1,1", "--quad", "0,0,0,0"],
        &["table", "7"],
        &["table", "3", "--filter"],
        &["symmetry", "--pd", "X[1,3,2,4], X[3,1,4,2]", "--compare"],
        &["frobnicate"],
    ] {
        assert_eq!(code(&whitten(args)), 2, "{args:?}");
    }
}

#[test]
fn unknown_link_exits_3() {
    let o = whitten(&["symmetry", "9^2_99"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("9^2_99"));
}

#[test]
fn stabilizer_of_triple() {
    let o = whitten(&["stabilizer", "--triple", "1,1,-1", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["order"], 12);
    assert_eq!(v["isomorphism"], "D6");
    assert_eq!(v["elements"].as_array().unwrap().len(), 12);

    let o = whitten(&["stabilizer", "--matrix", "0 1 0; 1 0 0; 0 0 0"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("order 16"));
}

#[test]
fn symmetry_json_round_trip() {
    let o = whitten(&["symmetry", "7^2_5", "--compare", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["link"], "7^2_5");
    assert_eq!(v["order"], 2);
    assert_eq!(v["name"], "Sigma2,1");
    assert_eq!(v["truth"]["verdict"]["kind"], "equal");
    let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(again, v);
}

#[test]
fn symmetry_from_pd() {
    let o = whitten(&["symmetry", "--pd", "X[1,3,2,4], X[3,1,4,2]", "--format", "tsv"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let row: Vec<&str> = out.lines().nth(1).unwrap().split('\t').collect();
    assert_eq!(row[1], "2");
    assert_eq!(row[2], "8");
}

#[test]
fn tables_diff_clean() {
    for t in ["3", "6", "8", "9", "10", "11"] {
        let o = whitten(&["table", t, "--diff"]);
        assert_eq!(code(&o), 0, "table {t}: {}", stdout(&o));
        assert!(stdout(&o).contains("diff: pass"));
    }
}

#[test]
fn table_8_tsv() {
    let o = whitten(&["table", "8", "--format", "tsv"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 31);
    assert_eq!(lines[0], "link\tthistlethwaite\tgroup");
    assert!(lines.contains(&"7^2_5\t7a2\tSigma2,1"));
}

#[test]
fn table_json_has_diff() {
    let o = whitten(&["table", "6", "--diff", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["diff"]["pass"], true);
    assert_eq!(v["rows"].as_array().unwrap().len(), 9);
    assert_eq!(v["rows"][8]["name"], "Gamma2");
}

#[test]
fn filter_mismatch_exits_5() {
    let o = whitten(&["table", "10", "--diff", "--filter", "--satellites"]);
    assert_eq!(code(&o), 5);
    assert!(stdout(&o).contains("8^3_5"));
}

#[test]
fn census_verify_and_list() {
    let o = whitten(&["census", "verify"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "48 records, 0 problem(s)\n");
    let o = whitten(&["census", "list", "--format", "tsv"]);
    assert_eq!(stdout(&o).lines().count(), 49);
}

fn with_census(text: &str, args: &[&str]) -> Output {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    Command::new(env!("CARGO_BIN_EXE_whitten"))
        .args(args)
        .env("WHITTEN_CENSUS", f.path())
        .output()
        .unwrap()
}

#[test]
fn census_override() {
    let o = with_census(CENSUS, &["census", "verify"]);
    assert_eq!(code(&o), 0);

    let mut v: Value = serde_json::from_str(CENSUS).unwrap();
    let recs = v["records"].as_array_mut().unwrap();
    let r = recs.iter_mut().find(|r| r["rolfsen"] == "7^2_5").unwrap();
    r["sigma_order"] = Value::from(4);
    let o = with_census(&v.to_string(), &["census", "verify"]);
    assert_eq!(code(&o), 5);

    let o = with_census("{ not json", &["census", "list"]);
    assert_ne!(code(&o), 0);

    let o = Command::new(env!("CARGO_BIN_EXE_whitten"))
        .args(["census", "list"])
        .env("WHITTEN_CENSUS", "/nonexistent/census.json")
        .output()
        .unwrap();
    assert_eq!(code(&o), 1);
}
