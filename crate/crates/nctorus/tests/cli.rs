//! End-to-end tests of the command-line tool.

use nctorus::arith::RatFun;
use nctorus::residue::{assemble_f, quadrature_oracle, IntegralKey, Normalization};
use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nctorus")).args(args).env_remove("NCTORUS_OUTPUT_DIR").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn integral_matches_table_one_row_one() {
    let o = run(&["integral", "3", "0", "1", "0", "0", "--normalization", "table"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "k^-3, pi * 1/16\n");
    let raw = run(&["integral", "3", "0", "1", "0", "0", "--normalization", "raw"]);
    assert_eq!(stdout(&raw), "k^-3, pi * 1/4\n");
}

#[test]
fn invalid_configurations_exit_with_two() {
    assert_eq!(run(&["integral", "0", "0", "1", "0", "0"]).status.code(), Some(2));
    assert_eq!(run(&["einstein", "--b-depth", "2"]).status.code(), Some(2));
    assert_eq!(run(&["metric", "--format", "latex"]).status.code(), Some(2));
    assert_eq!(run(&["metric", "--forms", "u"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--oracle-samples", "0"]).status.code(), Some(2));
}

#[test]
fn json_reports_carry_schema_version() {
    let o = run(&["torsion", "--format", "json", "--normalization", "raw"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["functional"], "torsion");
    assert_eq!(v["overall_zero"], true);
    let m: serde_json::Value = serde_json::from_str(&stdout(&run(&["integral", "1", "1", "1", "0", "0", "--format", "json"]))).unwrap();
    assert_eq!(m["k_power"], -3);
    let num: Vec<String> = serde_json::from_value(m["value_over_pi"]["num"].clone()).unwrap();
    let den: Vec<String> = serde_json::from_value(m["value_over_pi"]["den"].clone()).unwrap();
    let value = RatFun::from_dense(&num, &den).unwrap();
    let (_, lib) = assemble_f(&IntegralKey::new(1, 1, 1, 0, 0), Normalization::Table).unwrap();
    assert_eq!(value, lib);
    let s = 2.0;
    let oracle = quadrature_oracle(1, 1, 1, s).unwrap();
    assert!((value.eval_f64(s) * std::f64::consts::PI - oracle).abs() < 1e-10);
}

#[test]
fn tables_are_deterministic_and_vanish() {
    let a = run(&["tables", "--format", "latex"]);
    let b = run(&["tables", "--format", "latex"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert_eq!(text.matches("\\begin{longtable}").count(), 6);
    assert!(text.contains("No. & Terms & $C\\times F(s,m,n,\\beta,a,b)$ & Result"));
    assert!(text.contains("\\frac{\\pi}{k^{3} 8}"));
}

#[test]
fn einstein_and_closedness_vanish() {
    let e = run(&["einstein"]);
    assert_eq!(e.status.code(), Some(0));
    assert!(stdout(&e).contains("overall: zero"));
    let c = run(&["closedness", "--lengths", "1,3"]);
    assert_eq!(c.status.code(), Some(0));
    let m = run(&["metric", "--normalization", "raw"]);
    assert!(stdout(&m).contains("metric: u_1 v_1 -> pi * 2 * k^-1"));
    assert!(stdout(&m).contains("metric: u_2 v_2 -> pi * 2 * k^1"));
}

#[test]
fn output_directory_from_environment() {
    let dir: PathBuf = std::env::temp_dir().join(format!("nctorus-cli-{}", std::process::id()));
    let o = Command::new(env!("CARGO_BIN_EXE_nctorus"))
        .args(["symbols", "--format", "json"])
        .env("NCTORUS_OUTPUT_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let written = std::fs::read_to_string(dir.join("symbols.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&written).unwrap();
    assert_eq!(v["symbols"][0]["name"], "rho(D_k)");
    assert_eq!(v["symbols"].as_array().unwrap().len(), 2 + 3 + 3);
    std::fs::remove_dir_all(&dir).unwrap();
}
