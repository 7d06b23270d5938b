use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_aci-gb"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let o = run(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout).unwrap()
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../schemas")
        .join(format!("{name}.schema.json"));
    let s: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&s).unwrap()
}

fn valid_json(name: &str, args: &[&str]) -> Value {
    let v: Value = serde_json::from_str(&stdout(args)).unwrap();
    let errors: Vec<String> = schema(name).iter_errors(&v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{args:?} violates {name}: {errors:?}");
    v
}

#[test]
fn golden_basis_text() {
    let out = stdout(&["gb", "--n", "4", "--m", "3,2,2,3", "--k", "2", "--format", "text"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 8);
    assert!(lines.contains(&"x1*x2*x3 + x1*x2*x4 + x1*x3*x4 + 2*x2*x3*x4 + 1/2*x1*x4^2 + x2*x4^2 + x3*x4^2"));
    assert!(lines.contains(&"x4^3"));
}

#[test]
fn every_json_output_matches_its_schema() {
    let gb = valid_json("basis", &["gb", "--m", "3,2,2,3", "--k", "2"]);
    assert_eq!(gb["elements"].as_array().unwrap().len(), 8);
    assert!(gb["elements"][4]["terms"]
        .as_array()
        .unwrap()
        .iter()
        .any(|t| t["coeff"] == "1/2"));
    valid_json("basis", &["gb", "--m", "eq:3:4", "--k", "1", "--char", "7", "--ranking", "4,3,2,1"]);
    valid_json("basis", &["gb", "--m", "2,3,4", "--k", "2", "--order", "grlex"]);
    valid_json("crit", &["crit", "--m", "3,2,2,3", "--k", "2"]);
    valid_json("init", &["init", "--m", "2,3,4", "--k", "2", "--ranking", "2,3,1"]);
    let h = valid_json("hilbert", &["hilbert", "--m", "3,2,2,3", "--k", "2"]);
    assert_eq!(h["hs_P"], serde_json::json!([1, 4, 8, 10, 8, 4, 1]));
    assert_eq!(h["hs_quotient"], serde_json::json!([1, 4, 7, 6]));
    for fam in ["motzkin", "riordan", "catalan"] {
        valid_json("seq", &["seq", "--family", fam, "--max", "8"]);
    }
    valid_json("seq", &["seq", "--family", "g", "--m", "3", "--k", "2", "--max", "8"]);
    valid_json("seq", &["seq", "--family", "s-catalan", "--m", "3", "--max", "4"]);
    valid_json("seq", &["seq", "--family", "spin", "--sigma2", "1", "--max", "8"]);
    valid_json("wlp", &["wlp", "--m", "eq:2:5", "--p", "3"]);
    valid_json("wlp", &["wlp", "--m", "2,2,2,4,5", "--p", "3"]);
    valid_json("rank", &["rank", "--m", "eq:3:3", "--p", "2", "--d", "2"]);
    valid_json("verify", &["verify", "--max-n", "3", "--max-m", "4", "--max-k", "2", "--format", "json"]);
}

#[test]
fn motzkin_row() {
    assert_eq!(
        stdout(&["seq", "--family", "motzkin", "--max", "8", "--format", "text"]),
        "1 1 2 4 9 21 51 127 323\n"
    );
    let csv = stdout(&["seq", "--family", "g", "--m", "3", "--k", "1", "--max", "4", "--format", "csv"]);
    assert!(csv.starts_with("n,value\n0,0\n1,1\n"));
}

#[test]
fn wlp_verdicts_and_witness() {
    let v = valid_json("wlp", &["wlp", "--m", "eq:3:5", "--p", "5"]);
    assert_eq!(v["has_wlp"], false);
    let v = valid_json("wlp", &["wlp", "--m", "eq:3:5", "--p", "11"]);
    assert_eq!(v["has_wlp"], true);
    let v = valid_json("wlp", &["wlp", "--m", "2,2,2,4,5", "--p", "3"]);
    assert_eq!(v["has_wlp"], true);
    assert_eq!(v["initial_ideal_diverges"], true);
}

#[test]
fn verify_reports_census() {
    let v = valid_json("verify", &["verify", "--max-n", "3", "--max-m", "4", "--max-k", "2", "--format", "json"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["census"]["count"], 5);
    let empty = stdout(&["verify", "--max-n", "0"]);
    assert!(empty.contains("0 rows, 0 failures: PASS"));
}

#[test]
fn render_formats() {
    let a = stdout(&["render", "--m", "4,2,5", "--k", "4", "--monomial", "x1^3*x3^2"]);
    assert!(a.contains('*') && a.contains('+'));
    let s = stdout(&["render", "--m", "4,2,5", "--k", "4", "--monomial", "x1^3*x3^2", "--format", "svg"]);
    assert!(s.starts_with("<svg") && s.contains("stroke=\"red\""));
}

#[test]
fn output_is_deterministic() {
    let args = ["gb", "--m", "2,3,2,20,3", "--k", "3", "--format", "json"];
    assert_eq!(stdout(&args), stdout(&args));
    let args = ["verify", "--max-n", "2", "--max-m", "3", "--max-k", "3", "--format", "csv"];
    let one = bin().args(args).env("ACI_GB_THREADS", "1").output().unwrap();
    assert_eq!(one.stdout, stdout(&args).into_bytes());
}

#[test]
fn exit_codes() {
    let bad = [
        vec!["gb", "--m", "3,x", "--k", "2"],
        vec!["gb", "--m", "3,2"],
        vec!["gb", "--n", "3", "--m", "3,2", "--k", "1"],
        vec!["gb", "--m", "3,2", "--k", "1", "--format", "svg"],
        vec!["wlp", "--m", "eq:2:5", "--p", "4"],
        vec!["render", "--m", "2,2", "--monomial", "x1^2"],
        vec!["nonsense"],
    ];
    for args in bad {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        let err = String::from_utf8(o.stderr).unwrap();
        assert_eq!(err.trim_end().lines().count(), 1, "{args:?}: {err}");
    }
    let o = bin().args(["gb", "--m", "2", "--k", "1"]).env("ACI_GB_THREADS", "zero").output().unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(run(&["--help"]).status.success());
}

#[test]
fn out_file_and_config() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("basis.txt");
    let cfg = dir.path().join("run.toml");
    std::fs::write(&cfg, "m = \"3,2,2,3\"\nk = 2\nformat = \"text\"\n").unwrap();
    let o = run(&["gb", "--config", cfg.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().count(), 8);
    let leftovers: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(leftovers.len(), 2);
    // Flags override the file.
    let o = stdout(&["gb", "--config", cfg.to_str().unwrap(), "--k", "1"]);
    assert_eq!(o.lines().next(), Some("x1 + x2 + x3 + x4"));
    std::fs::write(&cfg, "bogus = 1\n").unwrap();
    assert_eq!(run(&["gb", "--config", cfg.to_str().unwrap()]).status.code(), Some(1));
}
