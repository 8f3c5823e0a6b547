use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_shiftconv"));
    c.env_remove("SHIFTCONV_THREADS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let o = run(args);
    let v = serde_json::from_slice(&o.stdout).unwrap_or_else(|e| {
        panic!("{args:?}: {e}\nstdout: {}\nstderr: {}", String::from_utf8_lossy(&o.stdout), String::from_utf8_lossy(&o.stderr))
    });
    (o.status.code().unwrap(), v)
}

fn output<'a>(v: &'a Value, name: &str) -> &'a Value {
    v["outputs"].as_array().unwrap().iter().find(|o| o["name"] == name).unwrap_or_else(|| panic!("no output {name}"))
}

fn status(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn sum_matches_oracle() {
    let (code, v) = json(&["sum", "--N", "7", "--chi", "2", "--psi", "2", "--u", "0+0.10i", "--v", "0+0.07i", "--k", "1", "--X", "1000"]);
    assert_eq!(code, 0);
    let o = output(&v, "S(1000)");
    // divisor-enumeration oracle at 30 digits
    assert!((o["re"].as_f64().unwrap() - 94.1390140876707288).abs() < 1e-10);
    assert!((o["im"].as_f64().unwrap() + 335.440991491218166).abs() < 1e-10);
    assert_eq!(v["command"], "sum");
    assert_eq!(v["params"]["N"], 7);
    assert_eq!(v["params"]["u"]["im"], 0.1);
    assert_eq!(v["status"], "pass");
    assert!(v["runtime_ms"].is_u64());
}

#[test]
fn sum_at_one_is_zero() {
    let (_, v) = json(&["sum", "--X", "1"]);
    let o = output(&v, "S(1)");
    assert_eq!((o["re"].as_f64(), o["im"].as_f64()), (Some(0.0), Some(0.0)));
}

#[test]
fn sum_grid_ratio_tends_to_one() {
    let o = run(&["--format", "csv", "sum", "--X-grid", "1e4,1e5,1e6", "--with-main"]);
    assert_eq!(o.status.code(), Some(0));
    let mut r = csv::Reader::from_reader(o.stdout.as_slice());
    let h = r.headers().unwrap().clone();
    assert_eq!(&h[0], "X");
    let col = h.iter().position(|c| c == "abs_ratio_minus_1").unwrap();
    let dev: Vec<f64> = r.records().map(|rec| rec.unwrap()[col].parse().unwrap()).collect();
    assert_eq!(dev.len(), 3);
    assert!(dev[0] > dev[1] && dev[1] > dev[2], "{dev:?}");

    let (code, v) = json(&["sum", "--X-grid", "1e4,1e5,1e6", "--with-main"]);
    assert_eq!(code, 0);
    assert!(output(&v, "S/M(1000000)")["re"].is_f64());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(status(&["sum", "--N", "8", "--X", "10"]), 2);
    assert_eq!(status(&["sum", "--u", "0 + 1i", "--X", "10"]), 2);
    assert_eq!(status(&["sum", "--u", "0.3", "--v", "0.3", "--X", "10"]), 2);
    assert_eq!(status(&["verify", "nonsense"]), 2);
    assert_eq!(status(&["frobnicate"]), 2);
    assert_eq!(status(&["eval", "no_such_op"]), 2);
    assert_eq!(status(&["--format", "csv", "main-term", "--X", "10"]), 2);
    assert_eq!(status(&["fit", "--X-grid", "1e4,1e6"]), 2);
    assert_eq!(status(&["--help"]), 0);
}

#[test]
fn thread_variable_is_validated() {
    let o = bin().env("SHIFTCONV_THREADS", "lots").args(["sum", "--X", "10"]).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = bin().env("SHIFTCONV_THREADS", "0").args(["sum", "--X", "10"]).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn resource_limit_exits_three() {
    assert_eq!(status(&["--sieve-limit", "100", "sum", "--X", "1000"]), 3);
}

#[test]
fn verify_examples() {
    let (code, v) = json(&["verify", "mellin"]);
    assert_eq!(code, 0);
    let errs: Vec<f64> = v["outputs"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|o| o["name"].as_str().unwrap().contains("mellin_rel_error"))
        .map(|o| o["value"].as_f64().unwrap())
        .collect();
    assert_eq!(errs.len(), 20);
    assert!(errs.iter().all(|&e| e < 1e-7));

    let (code, v) = json(&["verify", "theorem1", "--quick"]);
    assert_eq!(code, 0, "{v}");
    assert!(output(&v, "X")["value"].as_u64().unwrap() <= 100_000);

    let (code, v) = json(&["verify", "exponents"]);
    assert_eq!(code, 0);
    assert_eq!(output(&v, "exact_ratio(1/4,1/4)")["value"], "13/21");
    assert_eq!(output(&v, "exact_ratio(1/4,-1/4)")["value"], "13/14");
}

#[test]
fn verify_quick_suites_pass() {
    for suite in ["characters", "lfunctional", "ramanujan", "hecke", "perron"] {
        let (code, v) = json(&["verify", suite, "--quick"]);
        assert_eq!(code, 0, "{suite}: {v}");
        assert_eq!(v["status"], "pass");
    }
}

#[test]
fn fit_examples() {
    let (code, v) = json(&["fit"]);
    assert_eq!(code, 0, "{v}");
    let slope = output(&v, "slope")["value"].as_f64().unwrap();
    assert!(slope <= 2.0 / 3.0 + 0.15);
    let o = run(&["--format", "csv", "fit", "--X-grid", "1e3,1e4,1e5,1e6"]);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.starts_with("X,ln_X,ln_residual\n"));
    assert_eq!(text.lines().count(), 5);
}

#[test]
fn growth_examples() {
    let (code, v) = json(&["growth", "--component", "r"]);
    assert_eq!(code, 0);
    assert!(output(&v, "slope")["value"].as_f64().unwrap().abs() <= 0.1);
    let (code, v) = json(&["growth", "--component", "v", "--u", "0.2", "--v", "0.1"]);
    assert_eq!(code, 0, "{v}");
    assert!((output(&v, "slope")["value"].as_f64().unwrap() - 0.7).abs() <= 0.15);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cont.csv");
    let (code, v) = json(&["growth", "--component", "cont", "--csv-out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(output(&v, "slope")["value"].as_f64().unwrap() <= 1.2);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("t,log_abs\n"));
    assert_eq!(text.lines().count(), 17);
}

#[test]
fn sigma_dump_and_load() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.sgt");
    let p = path.to_str().unwrap();
    let (code, v) = json(&["dump-sigma", "--s", "0.2+0.1i", "--N", "7", "--chi", "2", "--X", "5000", "--out", p]);
    assert_eq!(code, 0);
    assert_eq!(std::fs::metadata(&path).unwrap().len(), 44 + 16 * 5001);
    assert_eq!(output(&v, "bytes")["value"], 44 + 16 * 5001);
    let (code, v) = json(&["load-sigma", "--in", p, "--n", "1,12,5000"]);
    assert_eq!(code, 0);
    assert_eq!(output(&v, "sigma(1)")["re"], 1.0);
    assert_eq!(output(&v, "X")["value"], 5000);
    assert!(output(&v, "max_rel_diff_vs_direct")["value"].as_f64().unwrap() <= 1e-12);

    let mut bytes = std::fs::read(&path).unwrap();
    bytes[1] = b'?';
    let bad = dir.path().join("bad.sgt");
    std::fs::write(&bad, &bytes).unwrap();
    assert_ne!(status(&["load-sigma", "--in", bad.to_str().unwrap()]), 0);
    assert_ne!(status(&["load-sigma", "--in", dir.path().join("missing").to_str().unwrap()]), 0);
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn config_file_then_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "a.conf", "# level 11\nN = 11\nchi = 4\npsi = 2\nu = 0.15+0.3i\n");
    let (code, v) = json(&["--config", &cfg, "main-term", "--X", "100.5"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["params"]["N"], 11);
    assert_eq!(v["params"]["u"]["re"], 0.15);
    let (_, v) = json(&["--config", &cfg, "main-term", "--X", "100.5", "--u", "0+0.10i"]);
    assert_eq!(v["params"]["u"]["re"], 0.0);
    assert_eq!(v["params"]["N"], 11);

    let bad = write(dir.path(), "b.conf", "colour = blue\n");
    assert_eq!(status(&["--config", &bad, "sum", "--X", "10"]), 2);
    let broken = write(dir.path(), "c.conf", "N\n");
    assert_eq!(status(&["--config", &broken, "sum", "--X", "10"]), 2);
}

#[test]
fn eval_operations() {
    let (code, v) = json(&["eval", "gamma", "--s", "0.5"]);
    assert_eq!(code, 0);
    assert!((output(&v, "gamma")["re"].as_f64().unwrap() - std::f64::consts::PI.sqrt()).abs() < 1e-14);
    let (_, v) = json(&["eval", "char_eval", "--N", "5", "--chi", "1", "--n", "2"]);
    let o = &v["outputs"][0];
    assert!(o["re"].as_f64().unwrap().abs() < 1e-15 && (o["im"].as_f64().unwrap() - 1.0).abs() < 1e-15);
    let (_, v) = json(&["eval", "theorem_exponents", "--u", "0.25", "--v", "0.25"]);
    assert!((output(&v, "ratio")["value"].as_f64().unwrap() - 13.0 / 21.0).abs() <= 1e-12);
    assert_eq!(output(&v, "admissible")["value"], false);
    let (code, v) = json(&["eval", "list"]);
    assert_eq!(code, 0);
    let text = v.to_string();
    for op in ["shifted_sum", "lk_cont", "c_mellin_closed", "perron_demo", "sigma", "hyp2f1"] {
        assert!(text.contains(op), "{op}");
    }
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["--no-timing", "sum", "--X-grid", "1e3,1e5", "--with-main"];
    let a = bin().env("SHIFTCONV_THREADS", "1").args(args).output().unwrap();
    let b = bin().env("SHIFTCONV_THREADS", "8").args(args).output().unwrap();
    assert_eq!(a.stdout, b.stdout);
    assert!(String::from_utf8(a.stdout).unwrap().contains("\"runtime_ms\": 0"));
}
