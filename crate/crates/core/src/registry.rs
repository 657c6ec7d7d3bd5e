//! Fixed catalog of identities, each checked by evaluating its two sides
//! along independent computational routes (quadrature against a closed
//! form, or two unrelated series).

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, LN_2, PI};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::mfunc::{self, Branch};
use crate::quad::{self, EvalResult, QuadConfig};
use crate::series::{self, SeriesConfig, StirlingSign};
use crate::specfun::{self, Constant};

/// Settings shared by every check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyConfig {
    pub quad: QuadConfig,
    pub series: SeriesConfig,
    /// Multiplies every catalog tolerance.
    pub tol_scale: f64,
    /// Added to every right-hand side; a nonzero value must make checks fail.
    pub rhs_offset: f64,
    /// Record wall time; when off `elapsed_ms` is 0 and output is reproducible.
    pub timing: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            quad: QuadConfig::default(),
            series: SeriesConfig::default(),
            tol_scale: 1.0,
            rhs_offset: 0.0,
            timing: true,
        }
    }
}

/// Both sides of an identity at one parameter point.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    pub label: String,
    pub lhs: EvalResult,
    pub rhs: EvalResult,
}

impl Sample {
    fn new(label: impl Into<String>, lhs: EvalResult, rhs: EvalResult) -> Self {
        Self {
            label: label.into(),
            lhs,
            rhs,
        }
    }

    pub fn discrepancy(&self) -> f64 {
        (self.lhs.value - self.rhs.value).abs()
    }
}

type Recipe = fn(&VerifyConfig) -> Result<Vec<Sample>>;

/// One catalog entry.
#[derive(Clone, Copy)]
pub struct Identity {
    pub id: &'static str,
    /// The identity in formula form.
    pub statement: &'static str,
    /// Parameter points, human readable.
    pub parameters: &'static str,
    /// How the two sides are computed.
    pub method: &'static str,
    pub tol: f64,
    recipe: Recipe,
}

impl std::fmt::Debug for Identity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Identity")
            .field("id", &self.id)
            .field("tol", &self.tol)
            .finish_non_exhaustive()
    }
}

impl Identity {
    /// Evaluate both sides at every sample point.
    pub fn evaluate(&self, cfg: &VerifyConfig) -> Result<Vec<Sample>> {
        (self.recipe)(cfg)
    }
}

/// Outcome of checking one identity; the reported sides are those of the
/// worst sample.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub id: String,
    pub lhs: f64,
    pub rhs: f64,
    pub discrepancy: f64,
    pub tol: f64,
    pub pass: bool,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sample: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
}

/// Pass/fail counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

/// Verdicts in catalog order plus counts.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub verdicts: Vec<Verdict>,
    pub summary: Summary,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}

/// Judge evaluated samples against a tolerance. Any non-finite value or
/// empty sample set fails.
pub fn judge(id: &str, samples: &[Sample], tol: f64, rhs_offset: f64) -> Verdict {
    let mut worst: Option<(f64, &Sample)> = None;
    for s in samples {
        let rhs = s.rhs.value + rhs_offset;
        let d = (s.lhs.value - rhs).abs();
        let d = if d.is_nan() { f64::INFINITY } else { d };
        if worst.is_none_or(|(w, _)| d > w) {
            worst = Some((d, s));
        }
    }
    match worst {
        Some((d, s)) => Verdict {
            id: id.to_string(),
            lhs: s.lhs.value,
            rhs: s.rhs.value + rhs_offset,
            discrepancy: d,
            tol,
            pass: d <= tol,
            elapsed_ms: 0,
            sample: Some(s.label.clone()),
            diagnostic: None,
        },
        None => failed(id, tol, "no samples evaluated".into()),
    }
}

fn failed(id: &str, tol: f64, why: String) -> Verdict {
    Verdict {
        id: id.to_string(),
        lhs: f64::NAN,
        rhs: f64::NAN,
        discrepancy: f64::INFINITY,
        tol,
        pass: false,
        elapsed_ms: 0,
        sample: None,
        diagnostic: Some(why),
    }
}

/// The whole catalog, in its fixed order.
pub fn list_identities() -> &'static [Identity] {
    CATALOG
}

/// Look up an entry by id (case-insensitive).
pub fn find(id: &str) -> Result<&'static Identity> {
    CATALOG
        .iter()
        .find(|e| e.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Check one entry. Evaluation failures produce a failed verdict carrying
/// the error text.
pub fn verify_entry(entry: &Identity, cfg: &VerifyConfig) -> Verdict {
    let tol = entry.tol * cfg.tol_scale;
    let start = Instant::now();
    let mut v = match entry.evaluate(cfg) {
        Ok(samples) => judge(entry.id, &samples, tol, cfg.rhs_offset),
        Err(e) => failed(entry.id, tol, e.to_string()),
    };
    if cfg.timing {
        v.elapsed_ms = start.elapsed().as_millis() as u64;
    }
    v
}

/// Check the entry with the given id.
pub fn verify(id: &str, cfg: &VerifyConfig) -> Result<Verdict> {
    Ok(verify_entry(find(id)?, cfg))
}

/// Check every entry, concurrently; verdicts come back in catalog order.
pub fn verify_all(cfg: &VerifyConfig) -> Report {
    let verdicts: Vec<Verdict> = CATALOG.par_iter().map(|e| verify_entry(e, cfg)).collect();
    report(verdicts)
}

/// Assemble a report from verdicts.
pub fn report(verdicts: Vec<Verdict>) -> Report {
    let passed = verdicts.iter().filter(|v| v.pass).count();
    Report {
        summary: Summary {
            total: verdicts.len(),
            passed,
            failed: verdicts.len() - passed,
        },
        verdicts,
    }
}

// ---------------------------------------------------------------------------
// Recipes

fn exact(v: f64) -> EvalResult {
    EvalResult {
        value: v,
        err: 64.0 * f64::EPSILON * v.abs().max(1.0),
        evaluations: 0,
        converged: true,
    }
}

fn gamma() -> f64 {
    specfun::euler_gamma()
}

fn ln_gamma(x: f64) -> f64 {
    specfun::ln_gamma(x).unwrap_or(f64::NAN)
}

fn digamma(x: f64) -> f64 {
    specfun::digamma(x).unwrap_or(f64::NAN)
}

fn zeta3() -> f64 {
    specfun::constant(Constant::Zeta3)
}

fn gr4331(cfg: &VerifyConfig) -> Result<Vec<Sample>> {
    [0.5, 1.0, 3.0]
        .iter()
        .map(|&a: &f64| {
            let lhs = quad::integrate_laplace(f64::ln, a, f64::INFINITY, &cfg.quad)?;
            Ok(Sample::new(
                format!("a={a}"),
                lhs,
                exact(-(gamma() + a.ln()) / a),
            ))
        })
        .collect()
}

fn gr4332(cfg: &VerifyConfig) -> Result<Vec<Sample>> {
    let rhs = exact(
        2.0 * PI / 3f64.sqrt()
            * (5.0 / 6.0 * specfun::constant(Constant::LnTwoPi) - ln_gamma(1.0 / 6.0)),
    );
    // 1/(eˣ + e⁻ˣ − 1) = e⁻ˣ/(1 − e⁻ˣ + e⁻²ˣ)
    let first = quad::integrate_laplace(
        |x| {
            let e = (-x).exp();
            x.ln() / (1.0 - e + e * e)
        },
        1.0,
        f64::INFINITY,
        &cfg.quad,
    )?;
    let second = quad::integrate_abscissa(
        |p| {
            let ln_x = if p.from_hi < 0.5 {
                (-p.from_hi).ln_1p()
            } else {
                p.x.ln()
            };
            (-ln_x).ln() / (p.x * p.x - p.x + 1.0)
        },
        0.0,
        1.0,
        &cfg.quad,
    )?;
    Ok(vec![
        Sample::new("exponential form", first, rhs),
        Sample::new("log-log form", second, rhs),
    ])
}

fn vardi(cfg: &VerifyConfig) -> Result<Vec<Sample>> {
    let rhs = exact(
        FRAC_PI_2 * (ln_gamma(0.75) + 0.5 * specfun::constant(Constant::LnTwoPi) - ln_gamma(0.25)),
    );
    let first = quad::integrate_abscissa(
        |p| {
            // ln tan(π/4 + d) = 2 artanh(tan d); ln tan(π/2 − e) = −ln tan e
            let ln_tan = if p.from_lo <= p.from_hi {
                2.0 * p.from_lo.tan().atanh()
            } else {
                -p.from_hi.tan().ln()
            };
            ln_tan.ln()
        },
        FRAC_PI_4,
        FRAC_PI_2,
        &cfg.quad,
    )?;
    let second = quad::integrate_abscissa(
        |p| {
            let ln_x = if p.from_hi < 0.5 {
                (-p.from_hi).ln_1p()
            } else {
                p.x.ln()
            };
            (-ln_x).ln() / (1.0 + p.x * p.x)
        },
        0.0,
        1.0,
        &cfg.quad,
    )?;
    Ok(vec![
        Sample::new("log-log-tan form", first, rhs),
        Sample::new("log-log form", second, rhs),
    ])
}

fn stir_pole(cfg: &VerifyConfig) -> Result<Vec<Sample>> {
    [(1.0, 1usize), (1.0, 2), (0.5, 3)]
        .iter()
        .map(|&(b, n): &(f64, usize)| {
            let lhs =
                quad::integrate(|t| t.ln() / (1.0 + t).powi(n as i32 + 1), 0.0, b, &cfg.quad)?;
            let rhs = exact(series::real_pole_integral(n, b)?);
            Ok(Sample::new(format!("b={b} n={n}"), lhs, rhs))
        })
        .collect()
}

fn imag_pole(cfg: &VerifyConfig) -> Result<Vec<Sample>> {
    let mut out = Vec::new();
    for n in 0..=2usize {
        for x in [0.5, 1.0] {
            let lhs = quad::integrate(
                |t| t.ln() / (1.0 + t * t).powi(n as i32 + 1),
                0.0,
                x,
                &cfg.quad,
            )?;
            let rhs = exact(series::imag_pole_integral(n, x)?);
            out.push(Sample::new(format!("n={n} x={x}"), lhs, rhs));
            if x == 1.0 {
                let rhs = exact(series::imag_pole_integral_at_one(n));
                out.push(Sample::new(format!("n={n} x=1 (Catalan form)"), lhs, rhs));
            }
        }
    }
    Ok(out)
}

fn trig_log(cfg: &VerifyConfig, f: impl Fn(f64, f64) -> f64) -> Result<EvalResult> {
    quad::integrate_abscissa(|p| f(p.x, mfunc::ln_two_cos(p)), 0.0, FRAC_PI_2, &cfg.quad)
}

fn euler1(cfg: &VerifyConfig) -> Result<Vec<Sample>> {
    let lhs = trig_log(cfg, |x, l| x * l)?;
    Ok(vec![Sample::new("", lhs, exact(-7.0 / 16.0 * zeta3()))])
}

fn euler2(cfg: &VerifyConfig) -> Result<Vec<Sample>> {
    let lhs = trig_log(cfg, |x, l| x * x * l)?;
    Ok(vec![Sample::new("", lhs, exact(-FRAC_PI_4 * zeta3()))])
}

fn auyeung(cfg: &VerifyConfig) -> Result<Vec<Sample>> {
    let lhs = trig_log(cfg, |x, l| x * x * l * l)?;
    Ok(vec![Sample::new(
        "",
        lhs,
        exact(11.0 * PI.powi(5) / 1440.0),
    )])
}

fn m0_value(cfg: &VerifyConfig) -> Result<Vec<Sample>> {
    let m = mfunc::m_direct(0.0, &cfg.quad)?;
    let lhs = EvalResult {
        value: m.value,
        err: m.err,
        evaluations: 0,
        converged: true,
    };
    Ok(vec![Sample::new("a=0", lhs, exact(mfunc::m_at_zero()))])
}

fn gm_thm(cfg: &VerifyConfig) -> Result<Vec<Sample>> {
    [0.8, 1.2, 2.0]
        .iter()
        .map(|&a: &f64| {
            let m = mfunc::m_direct(a, &cfg.quad)?;
            let lhs = EvalResult {
                value: m.value,
                err: m.err,
                evaluations: 0,
                converged: true,
            };
            let rhs = mfunc::l_direct(a, &cfg.quad)?.affine(1.0, gamma() / a);
            Ok(Sample::new(format!("a={a}"), lhs, rhs))
        })
        .collect()
}

fn cospow(cfg: &VerifyConfig) -> Result<Vec<Sample>> {
    [(1.5, 0.7), (2.0, 1.0), (0.3, 0.2)]
        .iter()
        .map(|&(nu, a): &(f64, f64)| {
            let lhs = quad::integrate_abscissa(
                |p| {
                    let cos = if p.from_hi < 0.5 {
                        p.from_hi.sin()
                    } else {
                        p.x.cos()
                    };
                    cos.powf(nu) * (a * p.x).cos()
                },
                0.0,
                FRAC_PI_2,
                &cfg.quad,
            )?;
            let ln_rhs = PI.ln() + ln_gamma(nu + 2.0)
                - (nu + 1.0) * LN_2
                - (nu + 1.0).ln()
                - ln_gamma(1.0 + nu / 2.0 + a / 2.0)
                - ln_gamma(1.0 + nu / 2.0 - a / 2.0);
            Ok(Sample::new(
                format!("nu={nu} a={a}"),
                lhs,
                exact(ln_rhs.exp()),
            ))
        })
        .collect()
}

fn psi_rep(cfg: &VerifyConfig) -> Result<Vec<Sample>> {
    [0.5, 1.0, 2.3]
        .iter()
        .map(|&s: &f64| {
            let int = quad::integrate_abscissa(
                |p| {
                    let cos = if p.from_hi < 0.5 {
                        p.from_hi.sin()
                    } else {
                        p.x.cos()
                    };
                    p.x * cos.powf(s) * (s * p.x).sin()
                },
                0.0,
                FRAC_PI_2,
                &cfg.quad,
            )?;
            let lhs = int.affine(2f64.powf(s + 2.0) / PI, -gamma());
            Ok(Sample::new(format!("s={s}"), lhs, exact(digamma(s + 1.0))))
        })
        .collect()
}

fn psi_diff(cfg: &VerifyConfig) -> Result<Vec<Sample>> {
    [(0.5, 0.0), (2.0, 0.3)]
        .iter()
        .map(|&(p, q): &(f64, f64)| {
            let int = quad::integrate_abscissa(
                |n| {
                    let ln_x = if n.from_hi < 0.5 {
                        (-n.from_hi).ln_1p()
                    } else {
                        n.x.ln()
                    };
                    // (xᵖ − x^q)/(1 − x) = x^q expm1((p−q) ln x) / (1 − x)
                    (q * ln_x).exp() * ((p - q) * ln_x).exp_m1() / n.from_hi
                },
                0.0,
                1.0,
                &cfg.quad,
            )?;
            let rhs = exact(digamma(p + 1.0) - digamma(q + 1.0));
            Ok(Sample::new(
                format!("p={p} q={q}"),
                int.affine(-1.0, 0.0),
                rhs,
            ))
        })
        .collect()
}

fn binomial_psi_tail(cfg: &VerifyConfig) -> Result<Vec<Sample>> {
    [(0.5, 0usize), (1.7, 2), (2.5, 1)]
        .iter()
        .map(|&(t, j): &(f64, usize)| {
            let lhs = series::alt_binomial_tail(t, j, &cfg.series)?;
            let rhs = specfun::gen_binomial(t, j) * (digamma(j as f64 + 1.0) - digamma(t + 1.0));
            Ok(Sample::new(format!("t={t} j={j}"), lhs, exact(rhs)))
        })
        .collect()
}

fn form66(cfg: &VerifyConfig) -> Result<Vec<Sample>> {
    [0.3, 0.5]
        .iter()
        .map(|&a: &f64| {
            let lhs = mfunc::binomial_digamma_laplace(a, &cfg.quad)?;
            let rhs = (-(-a).exp_m1()).ln() + specfun::incomplete_gamma0(a)?;
            Ok(Sample::new(format!("a={a}"), lhs, exact(rhs)))
        })
        .collect()
}

fn stirl_gf(cfg: &VerifyConfig) -> Result<Vec<Sample>> {
    let mut out = Vec::new();
    for k in 0..=4usize {
        for b in [0.3f64, 0.7] {
            let lhs = series::stirling_genfunc(k, b, StirlingSign::Signed, &cfg.series)?;
            let fact = (1..=k).fold(1.0, |acc, m| acc * m as f64);
            let rhs = b.ln_1p().powi(k as i32) / fact;
            out.push(Sample::new(format!("k={k} b={b}"), lhs, exact(rhs)));
        }
    }
    Ok(out)
}

fn binom_classic(cfg: &VerifyConfig) -> Result<Vec<Sample>> {
    [(0.5, 0usize), (2.3, 1)]
        .iter()
        .map(|&(t, k): &(f64, usize)| {
            let lhs = series::binomial_tail_sum(t, k, &cfg.series)?;
            Ok(Sample::new(
                format!("t={t} k={k}"),
                lhs,
                exact(specfun::gen_binomial(t, k + 1)),
            ))
        })
        .collect()
}

fn m_eval(m: mfunc::MResult) -> EvalResult {
    EvalResult {
        value: m.value,
        err: m.err,
        evaluations: 0,
        converged: true,
    }
}

fn mofa_small(cfg: &VerifyConfig) -> Result<Vec<Sample>> {
    [0.1, 0.3, 0.5, 0.65]
        .iter()
        .map(|&a: &f64| {
            let lhs = m_eval(mfunc::m_closed_forced(a, Branch::Below, &cfg.quad)?);
            let rhs = m_eval(mfunc::m_direct(a, &cfg.quad)?);
            Ok(Sample::new(format!("a={a}"), lhs, rhs))
        })
        .collect()
}

fn cor24(cfg: &VerifyConfig) -> Result<Vec<Sample>> {
    [0.2, 0.5, LN_2]
        .iter()
        .map(|&a: &f64| {
            let lhs = m_eval(mfunc::m_exp_integral_form(a, &cfg.quad)?);
            let rhs = m_eval(mfunc::m_closed(a, &cfg.quad)?);
            Ok(Sample::new(format!("a={a}"), lhs, rhs))
        })
        .collect()
}

fn lng_series(cfg: &VerifyConfig) -> Result<Vec<Sample>> {
    [0.5, 1.0, 3.0]
        .iter()
        .map(|&a: &f64| {
            let lhs = mfunc::laplace_lngamma_unit(a, &cfg.series)?;
            let rhs = mfunc::laplace_lngamma_quad(a, 1.0, &cfg.quad)?;
            Ok(Sample::new(format!("a={a}"), lhs, rhs))
        })
        .collect()
}

fn cor26(cfg: &VerifyConfig) -> Result<Vec<Sample>> {
    [0.3, 0.5]
        .iter()
        .map(|&a: &f64| {
            let lhs = mfunc::laplace_lngamma_full(a, &cfg.series)?;
            let rhs = mfunc::laplace_lngamma_quad(a, f64::INFINITY, &cfg.quad)?;
            Ok(Sample::new(format!("a={a}"), lhs, rhs))
        })
        .collect()
}

fn nice1(cfg: &VerifyConfig) -> Result<Vec<Sample>> {
    let lhs = trig_log(cfg, |x, l| {
        let d = x * x + l * l;
        x * x * l / (d * d)
    })?;
    let zp2 = specfun::constant(Constant::ZetaPrime2);
    let rhs =
        7.0 * PI / 192.0 + PI * specfun::constant(Constant::LnTwoPi) / 96.0 - zp2 / (16.0 * PI);
    Ok(vec![Sample::new("", lhs, exact(rhs))])
}

fn half_lngamma_weight(t: f64) -> f64 {
    (-LN_2 * t).exp() * ln_gamma(t)
}

fn lngamma_laplace_at_ln2(cfg: &VerifyConfig) -> Result<Vec<Sample>> {
    let lhs = mfunc::laplace_lngamma_quad(LN_2, f64::INFINITY, &cfg.quad)?;
    let unit = mfunc::laplace_lngamma_unit(LN_2, &cfg.series)?;
    let constant = (gamma() + LN_2.ln()) / LN_2;
    Ok(vec![Sample::new("", lhs, unit.affine(2.0, -constant))])
}

fn t_lngamma_laplace_at_ln2(cfg: &VerifyConfig) -> Result<Vec<Sample>> {
    let lhs = quad::integrate_laplace(|t| t * ln_gamma(t), LN_2, f64::INFINITY, &cfg.quad)?;
    let unit = quad::integrate(|t| (t + 1.0) * half_lngamma_weight(t), 0.0, 1.0, &cfg.quad)?;
    let g = gamma() + LN_2.ln();
    let constant = (g * (1.0 + 2.0 * LN_2) - 1.0) / (LN_2 * LN_2);
    Ok(vec![Sample::new("", lhs, unit.affine(2.0, -constant))])
}

fn jump4(cfg: &VerifyConfig) -> Result<Vec<Sample>> {
    let j = mfunc::mprime_jump(&cfg.quad)?;
    Ok(vec![Sample::new("left - right", j.jump, exact(4.0))])
}

fn lambda0(cfg: &VerifyConfig) -> Result<Vec<Sample>> {
    let lim = series::lambda_euler_limit(0.0, &cfg.series)?;
    let rearranged = series::lambda_euler(0.0, &cfg.series)?;
    Ok(vec![
        Sample::new(
            "defining limit vs gamma",
            lim,
            exact(specfun::constant(Constant::Gamma)),
        ),
        Sample::new(
            "rearranged series vs -psi(1)",
            rearranged,
            exact(-digamma(1.0)),
        ),
    ])
}

fn hyp3f2(cfg: &VerifyConfig) -> Result<Vec<Sample>> {
    let mut out = Vec::new();
    for t in [0.0f64, 0.5, 0.9] {
        let lhs = series::hyp3f2_unit(t, &cfg.series)?;
        let rhs = 2.0 * (1.0 - gamma() - digamma(t + 1.0)) / (1.0 - t);
        out.push(Sample::new(format!("t={t}"), lhs, exact(rhs)));
    }
    // M(0) = 1 + ½ ∫₀¹ t(1−t) ₃F₂(1,1,2−t; 2,3; 1) dt with the series summed
    // at every node.
    let series_cfg = cfg.series;
    let failure = std::sync::Mutex::new(None);
    let int = quad::integrate(
        |t| match series::hyp3f2_unit(t, &series_cfg) {
            Ok(f) => t * (1.0 - t) * f.value,
            Err(e) => {
                *failure.lock().expect("not poisoned") = Some(e);
                f64::NAN
            }
        },
        0.0,
        1.0,
        &cfg.quad,
    );
    if let Some(e) = failure.into_inner().expect("not poisoned") {
        return Err(e);
    }
    let int = int?;
    // Each node carries the series error; its weighted sum is at most the target.
    let int = EvalResult {
        err: int.err + cfg.series.target_abs_err,
        ..int
    };
    out.push(Sample::new(
        "M(0) reconstruction",
        int.affine(0.5, 1.0),
        exact(mfunc::m_at_zero()),
    ));
    Ok(out)
}

fn moment614(cfg: &VerifyConfig) -> Result<Vec<Sample>> {
    (0..=3usize)
        .map(|n| {
            let lhs = exact(mfunc::moment_lngamma(n)?);
            let rhs = quad::integrate(|t| t.powi(n as i32) * ln_gamma(t), 0.0, 1.0, &cfg.quad)?;
            Ok(Sample::new(format!("n={n}"), lhs, rhs))
        })
        .collect()
}

macro_rules! entry {
    ($id:literal, $stmt:literal, $params:literal, $method:literal, $tol:expr, $recipe:expr) => {
        Identity {
            id: $id,
            statement: $stmt,
            parameters: $params,
            method: $method,
            tol: $tol,
            recipe: $recipe,
        }
    };
}

static CATALOG: &[Identity] = &[
    entry!(
        "GR-4331",
        "∫₀^∞ e^{-ax} ln x dx = -(γ + ln a)/a",
        "a ∈ {0.5, 1, 3}",
        "Laplace quadrature vs closed form",
        1e-10,
        gr4331
    ),
    entry!(
        "GR-4332",
        "∫₀^∞ ln x/(eˣ + e⁻ˣ - 1) dx = ∫₀¹ ln ln(1/x)/(x² - x + 1) dx = (2π/√3)(5/6 ln 2π - ln Γ(1/6))",
        "both integral forms",
        "quadrature vs lnΓ",
        1e-8,
        gr4332
    ),
    entry!(
        "VARDI",
        "∫_{π/4}^{π/2} ln ln tan x dx = ∫₀¹ ln ln(1/x)/(1 + x²) dx = (π/2) ln(Γ(3/4)√(2π)/Γ(1/4))",
        "both integral forms",
        "quadrature vs lnΓ",
        1e-8,
        vardi
    ),
    entry!(
        "STIR-POLE",
        "∫₀ᵇ ln t/(1+t)^{n+1} dt = closed form in |s(j+1,2)|",
        "(b, n) ∈ {(1,1), (1,2), (0.5,3)}",
        "quadrature vs Stirling sum",
        1e-9,
        stir_pole
    ),
    entry!(
        "IMAG-POLE",
        "∫₀ˣ ln t/(1+t²)^{n+1} dt = C(2n,n)/4ⁿ [g₀(x) + pₙ(x) ln x - Σ_{k<n} (arctan x + p_k(x))/(2k+1)]",
        "n ∈ {0,1,2}, x ∈ {0.5, 1}",
        "quadrature vs Ti₂/Catalan closed forms",
        1e-9,
        imag_pole
    ),
    entry!(
        "EULER-1",
        "∫₀^{π/2} x ln(2 cos x) dx = -7ζ(3)/16",
        "-",
        "quadrature vs ζ(3)",
        1e-9,
        euler1
    ),
    entry!(
        "EULER-2",
        "∫₀^{π/2} x² ln(2 cos x) dx = -πζ(3)/4",
        "-",
        "quadrature vs ζ(3)",
        1e-9,
        euler2
    ),
    entry!(
        "AUYEUNG",
        "∫₀^{π/2} x² ln²(2 cos x) dx = 11π⁵/1440",
        "-",
        "quadrature vs closed form",
        1e-9,
        auyeung
    ),
    entry!(
        "M0-VALUE",
        "M(0) = (1 + ln 2π - γ)/2",
        "a = 0",
        "quadrature vs constants",
        1e-8,
        m0_value
    ),
    entry!(
        "GM-THM",
        "M(a) = L(a) + γ/a for a > ln 2",
        "a ∈ {0.8, 1.2, 2}",
        "quadrature of M vs Laplace quadrature of ψ(s+1)",
        1e-7,
        gm_thm
    ),
    entry!(
        "COSPOW",
        "∫₀^{π/2} cos^ν x cos ax dx = πΓ(ν+2)/(2^{ν+1}(ν+1)Γ(1+ν/2+a/2)Γ(1+ν/2-a/2))",
        "(ν, a) ∈ {(1.5,0.7), (2,1), (0.3,0.2)}",
        "quadrature vs lnΓ",
        1e-9,
        cospow
    ),
    entry!(
        "PSI-REP",
        "ψ(s+1) = (2^{s+2}/π) ∫₀^{π/2} x cosˢx sin(sx) dx - γ",
        "s ∈ {0.5, 1, 2.3}",
        "quadrature vs digamma",
        1e-8,
        psi_rep
    ),
    entry!(
        "PSI-DIFF",
        "ψ(p+1) - ψ(q+1) = -∫₀¹ (xᵖ - x^q)/(1 - x) dx",
        "(p, q) ∈ {(0.5,0), (2,0.3)}",
        "quadrature vs digamma",
        1e-9,
        psi_diff
    ),
    entry!(
        "LEMMA21",
        "Σ_{ν≥1} (-1)^ν/ν C(t, ν+j) = C(t, j)[ψ(j+1) - ψ(t+1)]",
        "(t, j) ∈ {(0.5,0), (1.7,2), (2.5,1)}",
        "extrapolated series vs digamma",
        1e-5,
        binomial_psi_tail
    ),
    entry!(
        "FORM66",
        "∫₀¹ e^{-at} Σ_{j≥0} bʲ C(t,j) ψ(j+1) dt = ln(1 - e^{-a}) + E₁(a), b = eᵃ - 1",
        "a ∈ {0.3, 0.5}",
        "quadrature of the truncated sum vs exponential integral",
        1e-6,
        form66
    ),
    entry!(
        "STIRL-GF",
        "Σ_{j≥k} s(j,k) bʲ/j! = lnᵏ(1+b)/k! (signed Stirling numbers)",
        "k ≤ 4, b ∈ {0.3, 0.7}",
        "Stirling recurrence sum vs logarithm",
        1e-8,
        stirl_gf
    ),
    entry!(
        "BINOM-CLASSIC",
        "Σ_{m≥1} (-1)^{m-1} C(t+1, m+k+1) = C(t, k+1)",
        "(t, k) ∈ {(0.5,0), (2.3,1)}",
        "extrapolated series vs binomial",
        1e-7,
        binom_classic
    ),
    entry!(
        "MOFA-SMALL",
        "M(a) = γ/a + (a + ln(1-e^{-a}) - γ - ln a)/(1-e^{-a}) + a/(1-e^{-a}) ∫₀¹ e^{-at} lnΓ(t) dt, 0 < a < ln 2",
        "a ∈ {0.1, 0.3, 0.5, 0.65}",
        "closed form vs direct quadrature of M",
        1e-7,
        mofa_small
    ),
    entry!(
        "COR24",
        "M(a) = γ/a + (a + ln(1-e^{-a}) + Γ(0,a))/(1-e^{-a}) + 1/(1-e^{-a}) ∫₀¹ e^{-at} ψ(t+1) dt, 0 < a ≤ ln 2",
        "a ∈ {0.2, 0.5, ln 2}",
        "digamma form vs lnΓ closed form",
        1e-8,
        cor24
    ),
    entry!(
        "LNG-SERIES",
        "∫₀¹ e^{-at} lnΓ(t) dt = A(a-c)/a² - (c/2a)Λ(a/2π) + 2c Σ ln j/(a² + 4π²j²)",
        "a ∈ {0.5, 1, 3}",
        "series vs quadrature",
        1e-8,
        lng_series
    ),
    entry!(
        "COR26",
        "∫₀^∞ e^{-at} lnΓ(t) dt = -(γ + ln a)/(a c eᵃ) + A(a-c)/(a²c) - Λ(a/2π)/(2a) + 2 Σ ln j/(a² + 4π²j²), 0 < a < ln 2",
        "a ∈ {0.3, 0.5}",
        "series vs quadrature",
        1e-7,
        cor26
    ),
    entry!(
        "NICE1",
        "∫₀^{π/2} x² ln(2 cos x)/(x² + ln²(2 cos x))² dx = 7π/192 + π ln 2π/96 - ζ'(2)/(16π)",
        "-",
        "quadrature vs constants",
        1e-8,
        nice1
    ),
    entry!(
        "OLIVIER1",
        "∫₀^∞ f = 2∫₀¹ f - (γ + ln ln 2)/ln 2, f(t) = 2^{-t} lnΓ(t)",
        "-",
        "Laplace quadrature vs lnΓ series on [0,1]",
        1e-8,
        lngamma_laplace_at_ln2
    ),
    entry!(
        "OLIVIER2",
        "∫₀^∞ t f = 2∫₀¹ (t+1) f - ((γ + ln ln 2)(1 + 2 ln 2) - 1)/ln² 2, f(t) = 2^{-t} lnΓ(t)",
        "-",
        "Laplace quadrature vs finite quadrature",
        1e-7,
        t_lngamma_laplace_at_ln2
    ),
    entry!(
        "JUMP4",
        "M'(ln 2⁻) - M'(ln 2⁺) = 4",
        "a = ln 2",
        "one-sided Richardson derivatives of the two closed forms",
        1e-3,
        jump4
    ),
    entry!(
        "LAMBDA-0",
        "Λ(0) = γ",
        "z = 0",
        "extrapolated defining limit vs γ",
        1e-10,
        lambda0
    ),
    entry!(
        "HYP3F2",
        "₃F₂(1,1,2-t; 2,3; 1) = 2(1 - γ - ψ(t+1))/(1-t); M(0) = 1 + ½∫₀¹ t(1-t) ₃F₂(1,1,2-t; 2,3; 1) dt",
        "t ∈ {0, 0.5, 0.9}; M(0)",
        "extrapolated series vs digamma; quadrature of the series vs M(0)",
        1e-6,
        hyp3f2
    ),
    entry!(
        "MOMENT614",
        "∫₀¹ tⁿ lnΓ(t) dt = finite sum of ζ(2k), ζ'(2k), ζ(2k+1)",
        "n ∈ {0,1,2,3}",
        "zeta sum vs quadrature",
        1e-9,
        moment614
    ),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_shape() {
        let cat = list_identities();
        assert_eq!(cat.len(), 28);
        let mut ids: Vec<_> = cat.iter().map(|e| e.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), 28);
        assert!(cat.iter().all(|e| !e.statement.is_empty() && e.tol > 0.0));
        assert!(find("lambda-0").is_ok());
        assert!(matches!(find("NOPE"), Err(Error::UnknownIdentity(_))));
    }

    #[test]
    fn judge_semantics() {
        let s = vec![Sample::new("x", exact(1.0), exact(1.0 + 1e-9))];
        assert!(judge("X", &s, 1e-8, 0.0).pass);
        assert!(!judge("X", &s, 1e-8, 1e-3).pass);
        assert!(!judge("X", &[], 1.0, 0.0).pass);
        let nan = vec![Sample::new("x", exact(f64::NAN), exact(1.0))];
        assert!(!judge("X", &nan, 1.0, 0.0).pass);
    }
}
