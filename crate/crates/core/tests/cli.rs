//! Black-box checks of the `pcfprod` binary: output, exit codes, file formats.

use std::process::{Command, Output};

use pcfprod::cli::{read_table_csv, TableRow};

fn pcfprod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pcfprod")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn eval_prints_value_and_metadata() {
    let o = pcfprod(&["eval", "--rep", "4.1", "--nu", "-1", "--mu", "-1", "--x", "0", "--y", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let v: f64 = out.lines().next().unwrap().trim_start_matches("value:").trim().parse().unwrap();
    assert!((v - std::f64::consts::FRAC_PI_2).abs() < 1e-10);
    assert!(out.contains("representation: 4.1") && out.contains("swapped: false"));

    let o = pcfprod(&["eval", "--rep", "erfc2", "--x", "0", "--y", "0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let j: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((j["value"].as_f64().unwrap() - 1.0).abs() < 1e-10);
    assert_eq!(j["representation"], "erfc2");
}

#[test]
fn eval_swap_is_reported() {
    let o = pcfprod(&["eval", "--rep", "4.1", "--nu", "0.5", "--mu", "-1.5", "--x", "2", "--y", "0.25", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let j: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(j["swapped"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(pcfprod(&["eval", "--rep", "4.3", "--nu", "0.5", "--mu", "-1", "--x", "1", "--y", "1"]).status.code(), Some(2));
    assert_eq!(pcfprod(&["eval", "--rep", "4.7", "--nu", "-1", "--mu", "-1", "--x", "1", "--y", "1"]).status.code(), Some(1));
    assert_eq!(pcfprod(&["eval", "--rep", "4.1", "--x", "1", "--y", "1"]).status.code(), Some(1));
    assert_eq!(pcfprod(&["eval", "--rep", "4.1", "--nu", "abc", "--mu", "-1", "--x", "1", "--y", "1"]).status.code(), Some(1));
    assert_eq!(pcfprod(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(pcfprod(&["--help"]).status.code(), Some(0));
    assert_eq!(pcfprod(&["--version"]).status.code(), Some(0));
    assert_eq!(pcfprod(&["verify", "--tol", "-1"]).status.code(), Some(1));
}

#[test]
fn non_convergence_exits_3() {
    let o = Command::new(env!("CARGO_BIN_EXE_pcfprod"))
        .args(["eval", "--rep", "4.1", "--nu", "-0.5", "--mu", "-0.5", "--x", "1", "--y", "1"])
        .env("PCFPROD_MAX_EVALS", "8")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn table_csv_round_trips_bitwise() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let o = pcfprod(&[
        "table", "--rep", "4.1", "--nu", "-1:-0.5:2", "--mu", "-0.5:0.5:2", "--x", "1", "--y", "2.5", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("rep,nu,mu,x,y,value,abs_err_est,status\n"));
    let rows = read_table_csv(&path).unwrap();
    assert_eq!(rows.len(), 4);

    let ev = pcfprod::products::Evaluator::new(pcfprod::products::Settings::from_env());
    for r in &rows {
        assert_eq!(r.status, "ok");
        let v = ev.dd(pcfprod::products::EvalPoint::new(r.nu, r.mu, r.x, r.y)).unwrap().value;
        assert_eq!(r.value.unwrap().to_bits(), v.to_bits());
    }
}

#[test]
fn table_marks_out_of_region_points_skipped() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    let o = pcfprod(&[
        "table", "--rep", "4.3", "--nu", "-0.5:0.5:2", "--mu", "-1", "--x", "1", "--y", "1", "--out", path.to_str().unwrap(), "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<TableRow> = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let status: Vec<&str> = rows.iter().map(|r| r.status.as_str()).collect();
    assert_eq!(status, ["ok", "skipped"]);
    assert!(rows[1].value.is_none());
}

#[test]
fn table_io_error_exits_4() {
    let o = pcfprod(&["table", "--rep", "erfc2", "--x", "1", "--y", "1", "--out", "/nonexistent-dir/t.csv"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn verify_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = pcfprod(&["verify", "--suite", "laplace", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let j: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(j["tol"], 1e-8);
    assert_eq!(j["summary"]["failed"], 0);
    assert_eq!(j["rows"].as_array().unwrap().len(), 63);

    // p = 0.7, 1, 2 residuals cannot reach 1e-30, so this must fail but still write the report
    let o = pcfprod(&["verify", "--suite", "laplace", "--tol", "1e-30", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(5));
    let j: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(j["summary"]["failed"].as_u64().unwrap() > 0);
}

#[test]
fn verify_identities_to_stdout() {
    let o = pcfprod(&["verify", "--suite", "identities"]);
    assert_eq!(o.status.code(), Some(0));
    let j: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(j["suites"][0], "identities");
}
