use std::io::Write;
use std::process::{Command, Output};

fn chiral(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chiral")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn temp_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn check_inline_stevedore() {
    let o = chiral(&["check", "--seifert", "[[1,0],[1,-2]]", "--label", "6_1", "--format", "json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["label"], "6_1");
    assert_eq!(v["verdict"], "OBSTRUCTED");
    assert_eq!(v["obstructing_primes"], serde_json::json!(["3"]));
    assert_eq!(v["primes"][0]["theorem1"], true);
    assert_eq!(v["primes"][0]["goeritz"], false);
}

#[test]
fn check_reads_files_and_alexander() {
    let f = temp_file("# figure-eight\n1 1\n0 -1\n");
    let o = chiral(&["check", "--seifert", f.path().to_str().unwrap(), "--alexander", "1,-3,1"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("INCONCLUSIVE"));

    let o = chiral(&["check", "--seifert", "1 1;0 -1", "--alexander", "-1,3,-1"]);
    assert!(o.status.success(), "{}", stderr(&o));
}

#[test]
fn check_rejects_bad_input() {
    let o = chiral(&["check", "--seifert", "1 2;3"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));

    let o = chiral(&["check", "--seifert", "[[1,1],[0,-1]]", "--alexander", "2,-5,2"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("9"), "{}", stderr(&o));

    let o = chiral(&["check", "--seifert", "[[1,0],[0,1]]"]);
    assert!(!o.status.success());
}

#[test]
fn scan_bundled_table() {
    let o = chiral(&["scan", "--format", "json", "--jobs", "2"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let reports = v.as_array().unwrap();
    assert!(reports.len() >= 10);
    assert_eq!(reports[0]["label"], "0_1");
    let verdict = |label: &str| reports.iter().find(|r| r["label"] == label).unwrap()["verdict"].clone();
    assert_eq!(verdict("4_1"), "INCONCLUSIVE");
    assert_eq!(verdict("3_1"), "OBSTRUCTED");
}

#[test]
fn scan_skips_bad_rows_unless_strict() {
    let csv = "name,seifert_matrix,alexander_polynomial,amphichiral\n\
               6_1,\"[[1,0],[1,-2]]\",\"2,-5,2\",false\n\
               broken,\"[[1,0],[1]]\",,\n\
               even,\"[[1,0],[0,1]]\",,\n\
               4_1,\"[[1,1],[0,-1]]\",\"1,-3,1\",true\n";
    let f = temp_file(csv);
    let path = f.path().to_str().unwrap();

    let o = chiral(&["scan", "--table", path, "--format", "json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let labels: Vec<_> = v.as_array().unwrap().iter().map(|r| r["label"].as_str().unwrap().to_string()).collect();
    assert_eq!(labels, ["6_1", "4_1"]);
    assert!(stderr(&o).contains("row 3"), "{}", stderr(&o));
    assert!(stderr(&o).contains("even"), "{}", stderr(&o));

    let o = chiral(&["scan", "--table", path, "--strict"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("row 3"), "{}", stderr(&o));
}

#[test]
fn scan_rejects_duplicates() {
    let f = temp_file("name,seifert_matrix\n3_1,\"[[-1,1],[0,-1]]\"\n3_1,\"[[-1,1],[0,-1]]\"\n");
    let o = chiral(&["scan", "--table", f.path().to_str().unwrap()]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("3_1"));
}

#[test]
fn explain_shows_oracle_witness() {
    let o = chiral(&["explain", "4_1"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("r = 2 satisfies"));

    let o = chiral(&["explain", "no_such_knot"]);
    assert!(!o.status.success());
}

#[test]
fn oracle_agrees_with_criterion() {
    let o = chiral(&["oracle", "--prime", "3", "--exponent", "2"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert_eq!(out.matches("no unit r").count(), 6);
    assert!(out.contains("not a square unit mod 3^2; brute force agrees on 6 form(s)"));

    let o = chiral(&["oracle", "--prime", "13", "--exponent", "1", "--unit", "-1"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("12/13^1: r = 5 gives"));

    let o = chiral(&["oracle", "--prime", "7", "--exponent", "9", "--bound", "1000"]);
    assert!(!o.status.success());
    let o = chiral(&["oracle", "--prime", "9", "--exponent", "1"]);
    assert!(!o.status.success());
}
