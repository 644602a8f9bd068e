use std::process::{Command, Output};

use loopcoh::cli::{BasisRecord, PoincareRecord};
use loopcoh::verify::VerifyReport;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_loopcoh"))
        .args(args)
        .env_remove("LOOPCOH_CUTOFF")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn main_series_of_the_two_sphere() {
    let o = run(&["poincare", "--which", "main", "-r", "1", "-p", "2", "-N", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "1 1 2 2 3 3 4"), "{}", stdout(&o));
}

#[test]
fn morse_leading_coefficient() {
    let o = run(&["poincare", "--which", "morse-e1", "-r", "2", "-p", "3", "-N", "0"]);
    assert_eq!(stdout(&o).lines().last(), Some("1"));
}

#[test]
fn auto_cutoff_in_header() {
    let o = run(&["poincare", "-r", "2", "-p", "3"]);
    assert!(stdout(&o).starts_with("# poincare main r=2 p=3 alpha=2 N=72 (auto 6*rho*p)"));
    let o = Command::new(env!("CARGO_BIN_EXE_loopcoh"))
        .args(["poincare", "-r", "1", "-p", "2"])
        .env("LOOPCOH_CUTOFF", "3")
        .output()
        .unwrap();
    let text = stdout(&o);
    assert!(text.contains("N=3 (from LOOPCOH_CUTOFF)"), "{text}");
    assert_eq!(text.lines().last(), Some("1 1 2 2"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["poincare", "--which", "nothing"]).status.code(), Some(2));
    assert_eq!(run(&["poincare", "-p", "9"]).status.code(), Some(2));
    assert_eq!(run(&["poincare", "-r", "0"]).status.code(), Some(2));
    assert_eq!(run(&["pages", "--which", "morse-e1", "--alpha", "4"]).status.code(), Some(2));
}

#[test]
fn plane_mod_two_generators() {
    let o = run(&["basis", "--which", "main", "-r", "2", "-p", "2", "-N", "14", "--format", "json"]);
    let recs: Vec<BasisRecord> = serde_json::from_str(&stdout(&o)).unwrap();
    let free_even: Vec<u64> = recs[0]
        .rows
        .iter()
        .filter(|row| row.kind == "free" && row.degree % 2 == 0)
        .map(|row| row.degree)
        .collect();
    assert_eq!(free_even, vec![0, 4, 6, 12, 14]);
}

#[test]
fn empty_rows_render_as_none() {
    let o = run(&["basis", "--which", "serre-e3", "-N", "0"]);
    assert!(stdout(&o).contains("(none)"));
}

#[test]
fn morse_page_table() {
    let o = run(&["pages", "--which", "morse-e1", "-r", "1", "-p", "2", "-N", "8"]);
    let text = stdout(&o);
    for name in ["alpha2", "alpha2*x", "zeta2", "zeta2*x", "alpha1"] {
        assert!(text.lines().any(|l| l.starts_with(&format!("{name} "))), "{name}\n{text}");
    }
}

#[test]
fn json_outputs_parse() {
    let o = run(&["poincare", "--which", "rational", "-r", "1", "-N", "4", "--format", "json"]);
    let recs: Vec<PoincareRecord> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(recs[0].coefficients, vec![1, 1, 1, 1, 1]);
    let o = run(&["verify", "-r", "1..2", "-p", "2,3", "--format", "json", "--jobs", "1"]);
    let report: VerifyReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(report.passes());
    let again: VerifyReport = serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
    assert_eq!(again, report);
}

#[test]
fn strict_verify_and_derived_csv() {
    let o = run(&["verify", "--strict", "--max-simplicial", "2", "-r", "1", "-p", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS derived r=1 p=2"));
    let o = run(&["derived", "--max-simplicial", "2", "--format", "csv"]);
    let text = stdout(&o);
    assert!(text.starts_with("r,p,alpha,i,j,dim_bruteforce,dim_closed_form,match\n"));
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true")));
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("loopcoh-{}.csv", std::process::id()));
    let o = run(&["pages", "--which", "serre-e2", "-N", "3", "--format", "csv", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(text.starts_with("s,t,dim,labels\n0,0,1,"));
}
