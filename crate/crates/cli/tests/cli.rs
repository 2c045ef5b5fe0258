use gencheb::recurrence::stieltjes_table;
use gencheb::{BranchConfig, QuadratureSpec};
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn write_config(dir: &Path, name: &str, alphas: &[f64], betas: &[f64]) -> PathBuf {
    let p = dir.join(name);
    let body = serde_json::json!({ "alphas": alphas, "betas": betas });
    std::fs::write(&p, body.to_string()).unwrap();
    p
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gencheb")).args(args).output().unwrap()
}

fn csv_rows(out: &Output) -> (Vec<String>, Vec<Vec<String>>) {
    let mut r = csv::Reader::from_reader(out.stdout.as_slice());
    let header = r.headers().unwrap().iter().map(String::from).collect();
    let rows = r.records().map(|x| x.unwrap().iter().map(String::from).collect()).collect();
    (header, rows)
}

fn f(s: &str) -> f64 {
    s.parse().unwrap()
}

#[test]
fn coeffs_for_symmetric_gap() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "sym.json", &[-0.6], &[0.6]);
    let out = run(&["coeffs", "--config", cfg.to_str().unwrap(), "-n", "8"]);
    assert!(out.status.success());
    let (header, rows) = csv_rows(&out);
    assert_eq!(header, ["n", "a_n", "b_n", "h_n"]);
    assert_eq!(rows.len(), 8);
    for r in &rows {
        let n: usize = r[0].parse().unwrap();
        let sign = if n.is_multiple_of(2) { -1.0 } else { 1.0 };
        assert!((f(&r[2]) - sign * 0.6).abs() < 1e-9, "b_{n} = {}", r[2]);
        if n >= 2 {
            assert!((f(&r[1]) - 0.16).abs() < 1e-9, "a_{n} = {}", r[1]);
        }
    }
}

#[test]
fn csv_round_trips_bit_for_bit() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "g1.json", &[-0.3], &[0.4]);
    let out = run(&["coeffs", "--config", cfg.to_str().unwrap(), "-n", "8"]);
    let (_, rows) = csv_rows(&out);
    let t = stieltjes_table(&BranchConfig::new(vec![-0.3], vec![0.4]).unwrap(), 8, &QuadratureSpec::default()).unwrap();
    for r in rows {
        let n: usize = r[0].parse().unwrap();
        assert_eq!(f(&r[1]).to_bits(), t.a(n).to_bits());
        assert_eq!(f(&r[2]).to_bits(), t.b(n).to_bits());
        assert_eq!(f(&r[3]).to_bits(), t.h(n).to_bits());
        assert_eq!(r[1].split('e').next().unwrap().replace(['-', '.'], "").len(), 17);
    }
}

#[test]
fn eval_single_interval() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "g0.json", &[], &[]);
    let out = run(&["eval", "--config", cfg.to_str().unwrap(), "-n", "3", "--x", "0.5"]);
    assert!(out.status.success());
    let (header, rows) = csv_rows(&out);
    assert_eq!(header, ["x", "P_n", "Q_n"]);
    assert!((f(&rows[0][1]) + 0.25).abs() < 1e-12);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(&["coeffs"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["coeffs", "--config", "/no/such/file.json"]).status.code(), Some(2));
    let bad = write_config(dir.path(), "bad.json", &[0.5], &[0.2]);
    let out = run(&["coeffs", "--config", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("out of order"));
    let g2 = write_config(dir.path(), "g2.json", &[-0.75, 0.2], &[-0.4, 0.85]);
    let out = run(&["disc", "--config", g2.to_str().unwrap(), "-n", "4", "--method", "formula"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn non_finite_values_are_refused() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "g1.json", &[-0.3], &[0.4]);
    let out = run(&["eval", "--config", cfg.to_str().unwrap(), "-n", "3", "--x", "0.4", "--method", "product"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
}

#[test]
fn map_build_and_detect() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "sym.json", &[-0.6], &[0.6]);
    let out = run(&["map", "build", "--config", cfg.to_str().unwrap()]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["outputs"]["K"], 2);
    let m: Vec<f64> = serde_json::from_value(v["outputs"]["M_coeffs"].clone()).unwrap();
    assert!((m[0] + 2.125).abs() < 1e-12 && m[1].abs() < 1e-12 && (m[2] - 3.125).abs() < 1e-12);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));

    let irr = write_config(dir.path(), "irr.json", &[-0.5], &[0.1]);
    let out = run(&["map", "detect", "--config", irr.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["outputs"]["period_found"], false);
    assert!(v["outputs"].get("K").is_none());

    let out = run(&["map", "family", "--K", "3", "--steps", "10"]);
    let (header, rows) = csv_rows(&out);
    assert_eq!(header, ["alpha", "beta", "K"]);
    assert_eq!(rows.len(), 18);
    assert_eq!(run(&["map", "family", "--K", "2", "--variant", "general", "--alpha", "-0.5"]).status.code(), Some(2));
}

#[test]
fn plot_data_respects_envelope() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "k2.json", &[-0.5], &[0.5]);
    let target = dir.path().join("plot.csv");
    let out = run(&["plot-data", "--config", cfg.to_str().unwrap(), "-n", "8", "--out", target.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    let mut r = csv::Reader::from_path(&target).unwrap();
    let mut count = 0;
    for rec in r.records() {
        let rec = rec.unwrap();
        let (p, rho) = (f(&rec[1]), f(&rec[2]));
        assert!((rho - 1.0).abs() < 1e-8 && p.abs() <= rho + 1e-8);
        count += 1;
    }
    assert_eq!(count, 800);

    let g0 = write_config(dir.path(), "g0.json", &[], &[]);
    let out = run(&["plot-data", "--config", g0.to_str().unwrap(), "-n", "5", "--points", "7"]);
    for row in csv_rows(&out).1 {
        let x = f(&row[0]);
        let t5 = (5.0 * x.acos()).cos();
        assert!((f(&row[1]) - t5).abs() < 1e-12);
    }
}

#[test]
fn envelope_report_for_odd_degree() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "k2.json", &[-0.2], &[0.2]);
    let out = run(&["envelope", "--config", cfg.to_str().unwrap(), "-n", "31"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["outputs"]["j"], 1);
    assert_eq!(v["checks"][0]["pass"], true);
}

#[test]
fn verify_passes_on_symmetric_gap() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "sym.json", &[-0.6], &[0.6]);
    let out = run(&["verify", "--config", cfg.to_str().unwrap(), "--suite", "all"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.len() > 40 && checks.iter().all(|c| c["pass"] == true));
    assert_eq!(v["outputs"]["criteria"].as_array().unwrap().len(), 13);
    let again = run(&["verify", "--config", cfg.to_str().unwrap(), "--suite", "all"]);
    let w: serde_json::Value = serde_json::from_slice(&again.stdout).unwrap();
    let strip = |v: &serde_json::Value| {
        v["checks"]
            .as_array()
            .unwrap()
            .iter()
            .filter(|c| !c["name"].as_str().unwrap().contains("runtime"))
            .cloned()
            .collect::<Vec<_>>()
    };
    assert_eq!(strip(&v), strip(&w));
}
