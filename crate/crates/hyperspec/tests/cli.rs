use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperspec"))
        .args(args)
        .env("RUST_BACKTRACE", "0")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

/// Value following `label` on the first line that starts with it.
fn field(text: &str, label: &str) -> f64 {
    let line = text.lines().find(|l| l.starts_with(label)).unwrap_or_else(|| panic!("no `{label}` in\n{text}"));
    line[label.len()..].split_whitespace().next().unwrap().parse().unwrap()
}

#[test]
fn radius_of_a_single_edge_is_one() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "e.hg", "3 3 1\n0 1 2\n");
    let out = run(&["radius", &f]);
    assert!(out.status.success());
    assert!((field(&stdout(&out), "rho") - 1.0).abs() < 1e-12);
}

#[test]
fn family_then_radius() {
    let dir = TempDir::new().unwrap();
    let f = dir.path().join("u2.hg");
    let out = run(&["family", "U2:k=3,a=6,b=0", "-o", f.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(fs::read_to_string(&f).unwrap().starts_with("3 16 8"));
    let out = run(&["radius", f.to_str().unwrap(), "--perron"]);
    let text = stdout(&out);
    assert!((field(&text, "rho") - 10f64.cbrt()).abs() < 1e-7);
    assert!(text.contains("perron"));
}

#[test]
fn disconnected_input_is_rejected() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "d.hg", "3 6 2\n0 1 2\n3 4 5\n");
    let out = run(&["radius", &f]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("not connected"));
}

#[test]
fn certify_reports_verdicts_and_bounds() {
    let out = run(&["certify", "U31-subnormal", "--m", "8", "--k", "3", "--a", "1"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("strictly"));

    let dir = TempDir::new().unwrap();
    let json = dir.path().join("c.json");
    let out = run(&["certify", "B31-normal", "--m", "6", "--k", "4", "--json", json.to_str().unwrap()]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(json).unwrap()).unwrap();
    assert!(v.is_object());
    let text = stdout(&out);
    let line = text.lines().find(|l| l.starts_with("bound")).unwrap();
    let value: f64 = line.rsplit(' ').next().unwrap().parse().unwrap();
    assert!((value - 12f64.powf(0.25)).abs() < 1e-9);
}

#[test]
fn certify_rejects_infeasible_parameters() {
    assert!(!run(&["certify", "B4-subnormal", "--m", "6", "--k", "3"]).status.success());
    assert!(!run(&["certify", "no-such-tag", "--m", "6", "--k", "4"]).status.success());
}

#[test]
fn power_check_matches_the_polynomial() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("g.mg");
    assert!(run(&["family", "Gab:m=8,a=4,b=2", "-o", g.to_str().unwrap()]).status.success());
    assert!(run(&["power-check", g.to_str().unwrap(), "--k", "3"]).status.success());

    let m = dir.path().join("m.mg");
    assert!(run(&["family", "Mab:m=5,a=2,b=0", "-o", m.to_str().unwrap()]).status.success());
    let out = run(&["power-check", m.to_str().unwrap(), "--k", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let tensor: f64 = text.split("tensor ").nth(1).unwrap().split(' ').next().unwrap().parse().unwrap();
    // rho(M(2,0))^2 = 11
    assert!((tensor - 11f64.powf(0.2)).abs() < 1e-6);
}

#[test]
fn oracle_enum_prints_a_clean_table() {
    let out = run(&["oracle-enum", "--m", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("counterexamples: 0"));
}

#[test]
fn verify_writes_json_and_csv() {
    let dir = TempDir::new().unwrap();
    let json = dir.path().join("r.json");
    let csv = dir.path().join("r.csv");
    let out = run(&[
        "verify",
        "bicyclic",
        "--k",
        "4",
        "--m",
        "5..6",
        "--json",
        json.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let reports: serde_json::Value = serde_json::from_str(&fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(reports.as_array().unwrap().len(), 2);
    assert!(fs::read_to_string(&csv).unwrap().lines().count() > 2);
}

#[test]
fn moves_script_applies_each_step() {
    let dir = TempDir::new().unwrap();
    let f = dir.path().join("u.hg");
    assert!(run(&["family", "U31:k=3,a=2,b=1,c=3", "-o", f.to_str().unwrap()]).status.success());
    let script = write(&dir, "s.txt", "# merge v into u\nPM 0 1\n");
    let out_file = dir.path().join("out.hg");
    let out = run(&["moves", f.to_str().unwrap(), &script, "-o", out_file.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("step 1"));
    assert!(Path::new(&out_file).exists());

    let bad = write(&dir, "bad.txt", "PM 0\n");
    let out = run(&["moves", f.to_str().unwrap(), &bad]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
}
