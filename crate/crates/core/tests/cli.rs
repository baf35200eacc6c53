//! Command-line behaviour: exit codes, default formats and deterministic output.

use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("heightlab").chain(args.iter().copied());
    let code = heightlab::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn constants_table_shows_genus_cap() {
    let (code, out, _) = run(&["constants", "--g", "2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("name"));
    assert!(out.lines().any(|l| l.starts_with("C2(2)") && l.contains("262656")));
    assert!(out.contains("98304"));
}

#[test]
fn constants_past_exponent_range_still_report() {
    let (code, out, _) = run(&["constants", "--g", "3", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let rows = v["results"].as_array().unwrap();
    assert!(rows.iter().any(|r| r["name"] == "C2(3)" && r["value"] == "604004352"));
    assert!(rows.iter().any(|r| r["name"] == "log10 C3(3)" && r["value"] == "overflow"));
}

#[test]
fn smyth_csv_profile() {
    let (code, out, _) = run(&["smyth", "--max-i", "4", "--mode", "certified"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("i,degree,height,error,tag"));
    let row1: Vec<&str> = lines.nth(1).unwrap().split(',').collect();
    assert_eq!(row1[0], "1");
    assert_eq!(row1[1], "2");
    let h: f64 = row1[2].parse().unwrap();
    assert!((h - 0.240606).abs() < 1e-6);
    assert_eq!(row1[4], "certified");
    assert_eq!(out.lines().count(), 6);
}

#[test]
fn json_is_byte_identical_across_runs() {
    for args in [
        &["chow-height", "--form", "x0^2+x1^2-x2^2", "--samples", "5000", "--seed", "9"][..],
        &["height", "--poly", "x^3-x-1"][..],
        &["constants", "--g", "1", "--format", "json"][..],
        &["point-height", "--coords", "3,-4,0", "--chow", "--samples", "3000"][..],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.0, 0, "{args:?}: {}", a.2);
        assert_eq!(a.1, b.1, "{args:?}");
    }
}

#[test]
fn json_schema() {
    let (_, out, _) = run(&["mahler", "--poly", "x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    for key in ["tool_version", "subcommand", "inputs", "seed", "results"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    let r = &v["results"][0];
    for key in ["name", "value", "method", "certificate"] {
        assert!(r.get(key).is_some(), "{key}");
    }
    assert!((r["value"].as_f64().unwrap() - 0.16235761200773).abs() < 1e-12);
}

#[test]
fn input_errors_exit_one() {
    assert_eq!(run(&["constnts"]).0, 1);
    assert_eq!(run(&["height", "--poly", "x^^2"]).0, 1);
    assert_eq!(run(&["height", "--poly", "0"]).0, 1);
    assert_eq!(run(&["height", "--poly", "y^2-2"]).0, 1);
    assert_eq!(run(&["constants", "--report", "everything"]).0, 1);
    assert_eq!(run(&["smyth", "--mode", "sloppy"]).0, 1);
    assert_eq!(run(&["verify-all", "--only", "11"]).0, 1);
    let (code, _, err) = run(&["height", "--poly", "x^^2"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("heightlab: "));
}

#[test]
fn failed_checks_exit_two() {
    let (code, out, _) = run(&["prime-family", "--poly", "x^3+x+2", "--prime", "2"]);
    assert_eq!(code, 2);
    assert!(out.contains("FAILS"));
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    for sub in ["height", "smyth", "chow-height", "remond-check", "bertini", "constants", "verify-all"] {
        assert!(out.contains(sub), "{sub}");
    }
}

#[test]
fn generator_accepts_negative_discriminant() {
    let (code, out, _) = run(&["generator", "--poly", "x^2+5", "--disc", "-20", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(out.contains("x^2 + 5"));
}

#[test]
fn precision_env_is_validated() {
    let (code, _, err) = run(&["constants", "--precision", "3"]);
    assert_eq!(code, 1);
    assert!(err.contains("precision"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_heightlab");
    let ok = Command::new(bin).args(["constants", "--g", "2"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("262656"));
    let typo = Command::new(bin).args(["constnts"]).output().unwrap();
    assert_eq!(typo.status.code(), Some(1));
    let env = Command::new(bin).args(["constants", "--format", "json"]).env("HEIGHTLAB_PRECISION", "128").output().unwrap();
    assert!(String::from_utf8_lossy(&env.stdout).contains("\"precision\": 128"));
}

#[test]
fn precondition_violations_are_usage_errors() {
    // deg_x must exceed deg_t
    assert_eq!(run(&["habegger", "--poly", "x-t^2"]).0, 1);
    // |disc(x^2-5)| = 20, not 5, so a basis is required
    assert_eq!(run(&["generator", "--poly", "x^2-5", "--disc", "5"]).0, 1);
}
