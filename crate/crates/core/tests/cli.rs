use std::process::Command;

use digamma_laplace::cli::run_with_env;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn dlap(args: &[&str]) -> Run {
    dlap_env(args, None)
}

fn dlap_env(args: &[&str], env: Option<&str>) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("dlap").chain(args.iter().copied());
    let code = run_with_env(argv, env, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

#[test]
fn eval_m_at_zero() {
    let r = dlap(&["eval", "m", "0"]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.starts_with("M(0) = 1.13033070075"), "{}", r.out);
    assert!(r.out.contains("branch below"));
    assert!(r.out.contains("method direct-quadrature"));
}

#[test]
fn eval_both_reports_agreement() {
    let r = dlap(&["eval", "m", "1.5", "--method", "both"]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.contains("abs_diff"));
    assert!(r.out.contains("branch above"));
}

#[test]
fn eval_l_and_domain_error() {
    let r = dlap(&["eval", "l", "2"]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.starts_with("L(2) = "));

    let r = dlap(&["eval", "l", "-1"]);
    assert_eq!(r.code, 2);
    assert!(!r.err.is_empty());
}

#[test]
fn verify_json_lists_every_entry() {
    let r = dlap(&["verify", "--all", "--format", "json", "--no-timing"]);
    assert_eq!(r.code, 0, "{}", r.err);
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    let verdicts = v["verdicts"].as_array().unwrap();
    assert_eq!(verdicts.len(), 28);
    assert!(verdicts.iter().all(|e| e["pass"] == true));
    for key in [
        "id",
        "lhs",
        "rhs",
        "discrepancy",
        "tol",
        "pass",
        "elapsed_ms",
    ] {
        assert!(verdicts[0].get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["summary"]["passed"], 28);
    assert_eq!(v["summary"]["failed"], 0);
}

#[test]
fn verify_is_reproducible_without_timing() {
    let a = dlap(&["verify", "--format", "json", "--no-timing"]);
    let b = dlap(&["verify", "--format", "json", "--no-timing"]);
    assert_eq!(a.out, b.out);
}

#[test]
fn verify_single_id_text() {
    let r = dlap(&["verify", "--id", "jump4"]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.starts_with("PASS JUMP4"), "{}", r.out);
    assert!(r.out.contains("1/1 passed"));
}

#[test]
fn unknown_id_is_a_usage_error() {
    let r = dlap(&["verify", "--id", "NOPE"]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("NOPE"));
}

#[test]
fn table_covers_the_figure_grid() {
    let r = dlap(&["table", "--from", "0.05", "--to", "2.0", "--step", "0.05"]);
    assert_eq!(r.code, 0, "{}", r.err);
    let mut lines = r.out.lines();
    assert_eq!(lines.next(), Some("a,m_direct,m_closed,branch,abs_diff"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 40);

    let branches: Vec<&str> = rows.iter().map(|r| r[3]).collect();
    let flips = branches.windows(2).filter(|w| w[0] != w[1]).count();
    assert_eq!(flips, 1);
    assert_eq!(branches[0], "below");
    assert_eq!(branches[39], "above");

    for row in &rows {
        let d: f64 = row[4].parse().unwrap();
        assert!(d <= 1e-6, "{row:?}");
    }
}

#[test]
fn table_with_cusp_and_file_output() {
    let path = std::env::temp_dir().join(format!("dlap-table-{}.csv", std::process::id()));
    let r = dlap(&[
        "table",
        "--from",
        "0.5",
        "--to",
        "1.0",
        "--step",
        "0.1",
        "--include-cusp",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0, "{}", r.err);
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(text.lines().count(), 1 + 6 + 1);
    assert!(text
        .lines()
        .any(|l| l.ends_with(",at,") || l.contains(",at,")));
}

#[test]
fn jump_prints_three_lines() {
    let r = dlap(&["jump"]);
    assert_eq!(r.code, 0, "{}", r.err);
    let lines: Vec<&str> = r.out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[2].starts_with("jump"));
    let value: f64 = lines[2].split_whitespace().nth(1).unwrap().parse().unwrap();
    assert!((value - 4.0).abs() < 1e-3);
}

#[test]
fn catalog_lists_ids() {
    let r = dlap(&["catalog"]);
    assert_eq!(r.code, 0);
    for id in ["GR-4331", "EULER-2", "JUMP4", "MOMENT614"] {
        assert!(r.out.contains(id), "{id}");
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(dlap(&[]).code, 2);
    assert_eq!(dlap(&["frobnicate"]).code, 2);
    assert_eq!(dlap(&["eval", "q", "1"]).code, 2);
    assert_eq!(
        dlap(&["table", "--from", "1", "--to", "0", "--step", "0.1"]).code,
        2
    );
    let help = dlap(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.out.contains("verify"));
}

#[test]
fn abs_tol_environment() {
    let r = dlap_env(&["verify", "--id", "NICE1"], Some("1e-14"));
    assert_eq!(r.code, 0, "{}", r.err);
    let r = dlap_env(&["verify", "--id", "NICE1"], Some("not-a-number"));
    assert_eq!(r.code, 2);
    let r = dlap_env(&["verify", "--id", "NICE1"], Some("-1"));
    assert_eq!(r.code, 2);
}

#[test]
fn binary_runs() {
    let out = Command::new(env!("CARGO_BIN_EXE_dlap"))
        .args(["eval", "m", "0"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("1.13033070075"));

    let out = Command::new(env!("CARGO_BIN_EXE_dlap"))
        .args(["verify", "--all"])
        .env("OLOA_ABS_TOL", "bogus")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
