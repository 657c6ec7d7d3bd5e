//! The `dlap` command line.
//!
//! ```text
//! dlap eval (m|l) <a> [--method direct|closed|both]
//! dlap verify [--all | --id <ID>] [--format json|text] [--rel-tol R] [--abs-tol A] [--no-timing]
//! dlap table --from F --to T --step S [--include-cusp] [--out PATH]
//! dlap jump
//! dlap catalog
//! ```
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 on a
//! usage or domain error. `OLOA_ABS_TOL` overrides the default absolute
//! quadrature tolerance; `--abs-tol` takes precedence over it.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::mfunc::{self, Branch, Target};
use crate::quad::QuadConfig;
use crate::registry::{self, Report, VerifyConfig};

/// Environment variable overriding the default absolute tolerance.
pub const ABS_TOL_ENV: &str = "OLOA_ABS_TOL";

#[derive(Debug, Parser)]
#[command(
    name = "dlap",
    version,
    about = "Evaluate M(a) and L(a), tabulate M, and check the identities around them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate M(a) or L(a).
    Eval {
        /// `m` or `l`.
        #[arg(value_parser = parse_target)]
        function: Target,
        #[arg(allow_negative_numbers = true)]
        a: f64,
        #[arg(long, value_enum, default_value_t = EvalMethod::Direct)]
        method: EvalMethod,
    },
    /// Check catalog identities.
    Verify {
        /// Check every entry (the default).
        #[arg(long, conflicts_with = "id")]
        all: bool,
        /// Check a single entry.
        #[arg(long)]
        id: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Relative quadrature tolerance.
        #[arg(long)]
        rel_tol: Option<f64>,
        /// Absolute quadrature tolerance.
        #[arg(long)]
        abs_tol: Option<f64>,
        /// Report elapsed_ms as 0 so that output is byte-reproducible.
        #[arg(long)]
        no_timing: bool,
    },
    /// Tabulate M(a) by quadrature and by closed form, as CSV.
    Table {
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        #[arg(long)]
        step: f64,
        /// Insert a = ln 2 into the grid.
        #[arg(long)]
        include_cusp: bool,
        /// Write to a file instead of standard output.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// One-sided slopes of M at ln 2 and the jump between them.
    Jump,
    /// List the identity catalog.
    Catalog,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EvalMethod {
    Direct,
    Closed,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

fn parse_target(s: &str) -> std::result::Result<Target, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Format a number with 12 significant digits: fixed notation when
/// `1e-4 ≤ |v| < 1e6`, scientific otherwise.
pub fn format_number(v: f64) -> String {
    if !v.is_finite() {
        return format!("{v}");
    }
    if v == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{v:.11e}");
    let exp: i32 = sci
        .rsplit_once('e')
        .and_then(|(_, e)| e.parse().ok())
        .expect("float exponent");
    if (-4..6).contains(&exp) {
        format!("{v:.prec$}", prec = (11 - exp) as usize)
    } else {
        sci
    }
}

/// `v` rounded to 12 significant digits.
fn round12(v: f64) -> f64 {
    if v.is_finite() {
        format!("{v:.11e}").parse().expect("round trip")
    } else {
        v
    }
}

fn quad_config(
    rel_tol: Option<f64>,
    abs_tol: Option<f64>,
    env_abs_tol: Option<&str>,
) -> Result<QuadConfig> {
    let mut cfg = QuadConfig::default();
    if let Some(raw) = env_abs_tol {
        cfg.abs_tol = raw
            .trim()
            .parse()
            .map_err(|_| Error::Config(format!("{ABS_TOL_ENV}={raw:?} is not a number")))?;
    }
    if let Some(t) = abs_tol {
        cfg.abs_tol = t;
    }
    if let Some(t) = rel_tol {
        cfg.rel_tol = t;
    }
    cfg.validate()?;
    Ok(cfg)
}

/// Run with the process environment.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let env = std::env::var(ABS_TOL_ENV).ok();
    run_with_env(args, env.as_deref(), out, err)
}

/// Run with an explicit value for `OLOA_ABS_TOL` (`None` = unset).
pub fn run_with_env<I, T>(
    args: I,
    env_abs_tol: Option<&str>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, env_abs_tol, out) {
        Ok(code) => code,
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
        Err(CliError::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

enum CliError {
    Lib(Error),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

fn dispatch(
    cmd: Command,
    env_abs_tol: Option<&str>,
    out: &mut dyn Write,
) -> std::result::Result<i32, CliError> {
    match cmd {
        Command::Eval {
            function,
            a,
            method,
        } => {
            let cfg = quad_config(None, None, env_abs_tol)?;
            eval(function, a, method, &cfg, out)?;
            Ok(0)
        }
        Command::Verify {
            all: _,
            id,
            format,
            rel_tol,
            abs_tol,
            no_timing,
        } => {
            let cfg = VerifyConfig {
                quad: quad_config(rel_tol, abs_tol, env_abs_tol)?,
                timing: !no_timing,
                ..VerifyConfig::default()
            };
            let report = match id {
                Some(id) => registry::report(vec![registry::verify(&id, &cfg)?]),
                None => registry::verify_all(&cfg),
            };
            write_report(&report, format, out)?;
            Ok(if report.all_passed() { 0 } else { 1 })
        }
        Command::Table {
            from,
            to,
            step,
            include_cusp,
            out: path,
        } => {
            let cfg = quad_config(None, None, env_abs_tol)?;
            let points = mfunc::grid(from, to, step, include_cusp)?;
            let rows = mfunc::tabulate(&points, &cfg)?;
            let mut csv = String::from("a,m_direct,m_closed,branch,abs_diff\n");
            for r in &rows {
                csv.push_str(&format!(
                    "{},{},{},{},{}\n",
                    format_number(r.a),
                    format_number(r.m_direct),
                    format_number(r.m_closed),
                    r.branch,
                    format_number(r.abs_diff)
                ));
            }
            match path {
                Some(p) => std::fs::write(p, csv)?,
                None => out.write_all(csv.as_bytes())?,
            }
            Ok(0)
        }
        Command::Jump => {
            let cfg = quad_config(None, None, env_abs_tol)?;
            let j = mfunc::mprime_jump(&cfg)?;
            writeln!(
                out,
                "left_derivative  {}  err {}",
                format_number(j.left.value),
                format_number(j.left.err)
            )?;
            writeln!(
                out,
                "right_derivative {}  err {}",
                format_number(j.right.value),
                format_number(j.right.err)
            )?;
            writeln!(
                out,
                "jump             {}  err {}",
                format_number(j.jump.value),
                format_number(j.jump.err)
            )?;
            Ok(0)
        }
        Command::Catalog => {
            for e in registry::list_identities() {
                writeln!(out, "{:<14} tol {:<6e} {}", e.id, e.tol, e.parameters)?;
                writeln!(out, "    {}", e.statement)?;
                writeln!(out, "    [{}]", e.method)?;
            }
            Ok(0)
        }
    }
}

fn eval(
    function: Target,
    a: f64,
    method: EvalMethod,
    cfg: &QuadConfig,
    out: &mut dyn Write,
) -> std::result::Result<(), CliError> {
    let (name, results) = match function {
        Target::M => {
            let direct = || mfunc::m_direct(a, cfg).map(|m| (m.value, m.err, m.method.to_string()));
            let closed = || mfunc::m_closed(a, cfg).map(|m| (m.value, m.err, m.method.to_string()));
            ("M", run_methods(method, direct, closed)?)
        }
        Target::L => {
            let direct = || {
                mfunc::l_direct(a, cfg).map(|r| (r.value, r.err, "direct-quadrature".to_string()))
            };
            let closed = || {
                mfunc::l_from_lngamma(a, cfg)
                    .map(|r| (r.value, r.err, "lngamma-laplace".to_string()))
            };
            ("L", run_methods(method, direct, closed)?)
        }
    };
    let branch = Branch::of(a);
    for (value, err, how) in &results {
        writeln!(
            out,
            "{name}({a}) = {}  branch {branch}  method {how}  err {}",
            format_number(*value),
            format_number(*err)
        )?;
    }
    if let [x, y] = results.as_slice() {
        writeln!(out, "abs_diff {}", format_number((x.0 - y.0).abs()))?;
    }
    Ok(())
}

type Evaluated = (f64, f64, String);

fn run_methods(
    method: EvalMethod,
    direct: impl Fn() -> Result<Evaluated>,
    closed: impl Fn() -> Result<Evaluated>,
) -> Result<Vec<Evaluated>> {
    Ok(match method {
        EvalMethod::Direct => vec![direct()?],
        EvalMethod::Closed => vec![closed()?],
        EvalMethod::Both => vec![direct()?, closed()?],
    })
}

fn write_report(report: &Report, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Json => {
            let mut rounded = report.clone();
            for v in &mut rounded.verdicts {
                v.lhs = round12(v.lhs);
                v.rhs = round12(v.rhs);
                v.discrepancy = round12(v.discrepancy);
            }
            let json = serde_json::to_string_pretty(&rounded).expect("report serializes");
            writeln!(out, "{json}")
        }
        Format::Text => {
            for v in &report.verdicts {
                writeln!(
                    out,
                    "{} {:<14} lhs {:<20} rhs {:<20} discrepancy {:<20} tol {:e}  {} ms{}",
                    if v.pass { "PASS" } else { "FAIL" },
                    v.id,
                    format_number(v.lhs),
                    format_number(v.rhs),
                    format_number(v.discrepancy),
                    v.tol,
                    v.elapsed_ms,
                    v.diagnostic
                        .as_deref()
                        .map(|d| format!("  ({d})"))
                        .unwrap_or_default()
                )?;
            }
            writeln!(
                out,
                "{}/{} passed, {} failed",
                report.summary.passed, report.summary.total, report.summary.failed
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_format() {
        assert_eq!(format_number(1.1303307007539063), "1.13033070075");
        assert_eq!(format_number(4.0), "4.00000000000");
        assert_eq!(format_number(-0.5), "-0.500000000000");
        assert_eq!(format_number(1e-4), "0.000100000000000");
        assert_eq!(format_number(3.2e-7), "3.20000000000e-7");
        assert_eq!(format_number(1e6), "1.00000000000e6");
        assert_eq!(format_number(999999.9999999), "1.00000000000e6");
        assert_eq!(format_number(0.0), "0");
    }

    #[test]
    fn env_override() {
        let cfg = quad_config(None, None, Some("1e-9")).unwrap();
        assert_eq!(cfg.abs_tol, 1e-9);
        let cfg = quad_config(None, Some(1e-11), Some("1e-9")).unwrap();
        assert_eq!(cfg.abs_tol, 1e-11);
        assert!(quad_config(None, None, Some("tiny")).is_err());
        assert!(quad_config(Some(-1.0), None, None).is_err());
    }
}
