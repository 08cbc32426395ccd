use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::sync::OnceLock;

use picount_core::zeros::{compute_zeros, save_binary};
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_picount"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

/// Zeros to 2·10⁴, computed once per test binary.
fn table() -> &'static Path {
    static T: OnceLock<(tempfile::TempDir, PathBuf)> = OnceLock::new();
    let (_, p) = T.get_or_init(|| {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("zeros.bin");
        save_binary(&compute_zeros(2e4, 1e-10).unwrap(), &p).unwrap();
        (dir, p)
    });
    p
}

fn tbl() -> &'static str {
    table().to_str().unwrap()
}

#[test]
fn pi_heuristic_exit_2() {
    let o = run(&["pi", "--x", "100000", "--mode", "partial-rh", "--rigor", "heuristic", "--zeros-compute", "20000"]);
    assert_eq!(code(&o), 2, "{}", String::from_utf8_lossy(&o.stderr));
    let s = stdout(&o);
    assert!(s.contains("= 9592"));
    assert!(s.contains("HEURISTIC"));
}

#[test]
fn pi_below_minimum_is_usage_error() {
    assert_eq!(code(&run(&["pi", "--x", "100"])), 1);
    assert_eq!(code(&run(&["pi"])), 1);
    assert_eq!(code(&run(&["pi", "--x", "100000", "--mode", "sideways"])), 1);
}

#[test]
fn json_budget_sums() {
    let o = run(&["pi", "--x", "1000000", "--zeros", tbl(), "--json"]);
    assert_eq!(code(&o), 2);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pi"], 78498);
    assert_eq!(v["certified"], false);
    let b = v["budget"].as_object().unwrap();
    let sum: f64 = b.iter().filter(|(k, _)| *k != "total").map(|(_, v)| v.as_f64().unwrap()).sum();
    let total = b["total"].as_f64().unwrap();
    assert!(total >= sum && total - sum < 1e-12, "{total} vs {sum}");
    for key in ["plan", "zeros_used", "timings", "x"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn plan_commands() {
    let o = run(&["plan", "--x", "1000000", "--zeros-compute", "20000"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("epsilon"));
    let o = run(&["plan", "--x", "1000000", "--zeros-compute", "20000", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["plan"]["c"].as_f64().unwrap() > 5.0);
    // table too short for certified rigor
    let o = run(&["plan", "--x", "1000000", "--rigor", "certified", "--zeros-compute", "100000"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("1000000"));
    // zero-sum reduction without RH verification
    assert_eq!(code(&run(&["plan", "--x", "1000000", "--mode", "unconditional", "--a", "0.8"])), 1);
}

#[test]
fn zeros_compute_verify_convert() {
    let dir = tempfile::tempdir().unwrap();
    let txt = dir.path().join("z.txt");
    let o = run(&["zeros", "compute", "--t-max", "100", "--out", txt.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("29 zeros"));
    assert_eq!(code(&run(&["zeros", "verify", txt.to_str().unwrap()])), 0);

    let bin1 = dir.path().join("z.bin");
    let txt2 = dir.path().join("z2.txt");
    let bin2 = dir.path().join("z2.bin");
    for (a, b) in [(&txt, &bin1), (&bin1, &txt2), (&txt2, &bin2)] {
        assert_eq!(code(&run(&["zeros", "convert", a.to_str().unwrap(), b.to_str().unwrap()])), 0);
    }
    assert_eq!(std::fs::read(&txt).unwrap(), std::fs::read(&txt2).unwrap());
    assert_eq!(std::fs::read(&bin1).unwrap(), std::fs::read(&bin2).unwrap());

    // drop one ordinate
    let text = std::fs::read_to_string(&txt).unwrap();
    let tampered: Vec<&str> = text.lines().enumerate().filter(|(i, _)| *i != 6).map(|(_, l)| l).collect();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, tampered.join("\n")).unwrap();
    assert_eq!(code(&run(&["zeros", "verify", bad.to_str().unwrap()])), 3);
    // swap two ordinates
    let mut lines: Vec<&str> = text.lines().collect();
    lines.swap(4, 5);
    std::fs::write(&bad, lines.join("\n")).unwrap();
    assert_eq!(code(&run(&["zeros", "verify", bad.to_str().unwrap()])), 3);
}

#[test]
fn verify_paths() {
    let o = run(&["verify", "--x", "100000", "--zeros", tbl()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("matches"));
    let o = run(&["verify", "--x", "2000000000"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("skipped"));
    let o = run(&["verify", "--x", "100000", "--zeros", tbl(), "--inject-fault", "1"]);
    assert_eq!(code(&o), 4);
    assert!(String::from_utf8_lossy(&o.stderr).contains("MISMATCH"));
}

#[test]
fn config_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.conf");
    std::fs::write(&cfg, format!("x = 50000\nzeros = {}\njson = true\n", tbl())).unwrap();
    let o = run(&["--config", cfg.to_str().unwrap(), "pi"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pi"], 5133);
    let o = run(&["--config", cfg.to_str().unwrap(), "pi", "--x", "100000"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pi"], 9592);
    std::fs::write(&cfg, "nonsense = 1\n").unwrap();
    assert_eq!(code(&run(&["--config", cfg.to_str().unwrap(), "pi", "--x", "100000"])), 1);
}

#[test]
fn thread_count_does_not_change_output() {
    let strip = |o: &Output| {
        let mut v: Value = serde_json::from_str(&stdout(o)).unwrap();
        v.as_object_mut().unwrap().remove("timings");
        v
    };
    let one = run(&["--threads", "1", "pi", "--x", "1000000", "--zeros", tbl(), "--json"]);
    let four = run(&["--threads", "4", "pi", "--x", "1000000", "--zeros", tbl(), "--json"]);
    assert_eq!(strip(&one), strip(&four));
}
