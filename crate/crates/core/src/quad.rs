//! Tanh-sinh quadrature, Laplace-type integrals on `[0, ∞)` and one-sided
//! Richardson derivatives.
//!
//! The finite-interval rule maps `[lo, hi]` through
//! `x = mid + half·tanh(π/2·sinh t)` and applies the trapezoidal rule in `t`
//! with step `2^{-level}`, halving until two successive levels agree. The
//! closed endpoints are never sampled, so integrable logarithmic (or weaker
//! power) endpoint singularities need no special handling.

use std::f64::consts::FRAC_PI_2;

use crate::error::{domain, Error, Result};

/// Truncation of the `t` axis; `1 − tanh(π/2·sinh 6)` is ~1e-300.
const T_MAX: f64 = 6.0;

/// How [`integrate_laplace`] treats an infinite upper limit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LaplaceCutoff {
    /// Substitute `u = e^{-at}`, giving a finite integral over `(0, 1]`.
    ExpSubstitution,
    /// Integrate over `[0, upper]` and drop the rest.
    Truncate { upper: f64 },
}

/// Tolerances and limits shared by the integrators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Number of step halvings allowed, in `[3, 16]`.
    pub max_levels: u32,
    pub laplace_cutoff: LaplaceCutoff,
    /// Largest step of the derivative schedule `h, h/2, …, h/64`.
    pub deriv_step: f64,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_tol: 1e-12,
            max_levels: 12,
            laplace_cutoff: LaplaceCutoff::ExpSubstitution,
            deriv_step: 1e-2,
        }
    }
}

impl QuadConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) {
            return Err(Error::Config(format!(
                "rel_tol must be > 0, got {}",
                self.rel_tol
            )));
        }
        if !(self.abs_tol > 0.0) {
            return Err(Error::Config(format!(
                "abs_tol must be > 0, got {}",
                self.abs_tol
            )));
        }
        if !(3..=16).contains(&self.max_levels) {
            return Err(Error::Config(format!(
                "max_levels must be in [3, 16], got {}",
                self.max_levels
            )));
        }
        if !(self.deriv_step > 0.0) {
            return Err(Error::Config(format!(
                "deriv_step must be > 0, got {}",
                self.deriv_step
            )));
        }
        if let LaplaceCutoff::Truncate { upper } = self.laplace_cutoff {
            if !(upper > 0.0 && upper.is_finite()) {
                return Err(Error::Config(format!(
                    "laplace truncation point must be finite and > 0, got {upper}"
                )));
            }
        }
        Ok(())
    }

    fn target(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }
}

/// A computed value with a claimed absolute error bound.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct EvalResult {
    pub value: f64,
    pub err: f64,
    /// Integrand or term evaluations spent.
    pub evaluations: usize,
    /// `false` when the requested tolerance was not reached; `value` is then
    /// the best estimate seen and `err` its estimated error.
    pub converged: bool,
}

impl EvalResult {
    pub fn exact(value: f64) -> Self {
        Self {
            value,
            err: 0.0,
            evaluations: 0,
            converged: true,
        }
    }

    /// `scale · self + offset`, with the error scaled accordingly.
    pub fn affine(self, scale: f64, offset: f64) -> Self {
        let value = scale * self.value + offset;
        Self {
            value,
            err: scale.abs() * self.err + f64::EPSILON * value.abs(),
            ..self
        }
    }

    /// Sum of two independent results; errors add.
    pub fn plus(self, other: EvalResult) -> Self {
        let value = self.value + other.value;
        Self {
            value,
            err: self.err + other.err + f64::EPSILON * value.abs(),
            evaluations: self.evaluations + other.evaluations,
            converged: self.converged && other.converged,
        }
    }
}

/// A quadrature node, with its distances to both endpoints computed without
/// cancellation. Integrands that are singular or ill-conditioned at an
/// endpoint should use `from_lo`/`from_hi` rather than `x - lo`/`hi - x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Abscissa {
    pub x: f64,
    pub from_lo: f64,
    pub from_hi: f64,
}

/// `∫_lo^hi f(x) dx` by tanh-sinh quadrature.
pub fn integrate(f: impl Fn(f64) -> f64, lo: f64, hi: f64, cfg: &QuadConfig) -> Result<EvalResult> {
    integrate_abscissa(|p| f(p.x), lo, hi, cfg)
}

/// Like [`integrate`], but the integrand sees each node as an [`Abscissa`].
pub fn integrate_abscissa(
    f: impl Fn(Abscissa) -> f64,
    lo: f64,
    hi: f64,
    cfg: &QuadConfig,
) -> Result<EvalResult> {
    cfg.validate()?;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::Config(format!(
            "integration bounds must be finite with lo < hi, got [{lo}, {hi}]"
        )));
    }
    let half = 0.5 * (hi - lo);
    let width = hi - lo;
    let mid = lo + half;

    let eval = |p: Abscissa| -> Result<f64> {
        let y = f(p);
        if y.is_finite() {
            Ok(y)
        } else {
            Err(Error::NonFinite { x: p.x, value: y })
        }
    };

    // Raw sums Σ w·f and Σ |w·f| over every node generated so far.
    let mut sum = 0.0;
    let mut abs_sum = 0.0;
    let mut evaluations = 0usize;

    let mut prev: Option<f64> = None;
    let mut best: Option<EvalResult> = None;
    let mut prev_small = false;

    for level in 0..=cfg.max_levels {
        let h = 0.5f64.powi(level as i32);
        let (start, stride) = if level == 0 { (0u64, 1u64) } else { (1, 2) };
        let mut k = start;
        loop {
            let t = k as f64 * h;
            if t > T_MAX {
                break;
            }
            let u = FRAC_PI_2 * t.sinh();
            let e = (-2.0 * u).exp();
            // 1 − tanh(u) and the Jacobian of the map at t.
            let comp = 2.0 * e / (1.0 + e);
            let w = FRAC_PI_2 * t.cosh() * 4.0 * e / ((1.0 + e) * (1.0 + e));
            if k == 0 {
                let y = eval(Abscissa {
                    x: mid,
                    from_lo: half,
                    from_hi: half,
                })?;
                evaluations += 1;
                sum += w * y;
                abs_sum += (w * y).abs();
            } else {
                let d = half * comp;
                if d > 0.0 {
                    let right = hi - d;
                    if right < hi && right > lo {
                        let y = eval(Abscissa {
                            x: right,
                            from_lo: width - d,
                            from_hi: d,
                        })?;
                        evaluations += 1;
                        sum += w * y;
                        abs_sum += (w * y).abs();
                    }
                    let left = lo + d;
                    if left > lo && left < hi {
                        let y = eval(Abscissa {
                            x: left,
                            from_lo: d,
                            from_hi: width - d,
                        })?;
                        evaluations += 1;
                        sum += w * y;
                        abs_sum += (w * y).abs();
                    }
                }
            }
            k += stride;
        }

        let value = half * h * sum;
        let floor = 8.0 * f64::EPSILON * half * h * abs_sum;
        if let Some(p) = prev {
            let diff = (value - p).abs();
            // Once the rule resolves the integrand each level roughly
            // doubles the correct digits, so the last difference bounds the
            // error of the newer value. Extrapolating from the ratio of
            // successive differences is not safe: it can stop a level early.
            let est = diff;
            let err = est.max(floor);
            let candidate = EvalResult {
                value,
                err,
                evaluations,
                converged: false,
            };
            if best.is_none_or(|b| err <= b.err) {
                best = Some(candidate);
            }
            // Two small differences in a row, so a lucky near-coincidence of
            // two unresolved levels cannot end the refinement.
            let small = err <= cfg.target(value);
            if level >= 3 && small && prev_small {
                return Ok(EvalResult {
                    converged: true,
                    ..candidate
                });
            }
            prev_small = small;
        }
        prev = Some(value);
    }
    Ok(best.expect("at least two levels are evaluated"))
}

/// `∫₀^upper e^{-at} g(t) dt` for `a > 0`; `upper` may be `f64::INFINITY`.
///
/// With an infinite upper limit and the default cutoff, `[0, 1/a]` is
/// integrated directly and the rest through `u = e^{-at}`, which turns it
/// into `(1/a) ∫₀^{1/e} g(−ln u / a) du`.
pub fn integrate_laplace(
    g: impl Fn(f64) -> f64,
    a: f64,
    upper: f64,
    cfg: &QuadConfig,
) -> Result<EvalResult> {
    if !(a > 0.0) || a.is_infinite() {
        return Err(domain("integrate_laplace", a, "0 < a < ∞"));
    }
    if !(upper > 0.0) {
        return Err(domain("integrate_laplace", upper, "upper > 0"));
    }
    let finite = |upper: f64| {
        integrate_abscissa(
            |p| {
                // t close to 0 is exactly `from_lo`.
                let t = if p.from_lo <= p.from_hi {
                    p.from_lo
                } else {
                    p.x
                };
                (-a * t).exp() * g(t)
            },
            0.0,
            upper,
            cfg,
        )
    };
    if upper.is_finite() {
        return finite(upper);
    }
    match cfg.laplace_cutoff {
        LaplaceCutoff::Truncate { upper } => finite(upper),
        LaplaceCutoff::ExpSubstitution => {
            // Split at t = 1/a so each piece keeps its singular end at the
            // lower limit, where node offsets are exact down to subnormals.
            let split = 1.0 / a;
            let head = finite(split)?;
            let tail = integrate_abscissa(|p| g(-p.from_lo.ln() / a), 0.0, (-1.0f64).exp(), cfg)?;
            Ok(head.plus(tail.affine(1.0 / a, 0.0)))
        }
    }
}

/// Which side of `x0` a one-sided derivative looks at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// One-sided first derivative of `f` at `x0`.
///
/// Forward (or backward) differences at steps `h·2^{-k}`, `k = 0..=6`, with
/// one Richardson column eliminating the O(h) term. The error estimate is
/// the change between the last two extrapolated values plus a roundoff term.
pub fn one_sided_derivative(
    f: impl Fn(f64) -> f64,
    x0: f64,
    side: Side,
    cfg: &QuadConfig,
) -> Result<EvalResult> {
    try_one_sided_derivative(
        |x| {
            let y = f(x);
            if y.is_finite() {
                Ok(y)
            } else {
                Err(Error::NonFinite { x, value: y })
            }
        },
        x0,
        side,
        cfg,
    )
}

/// [`one_sided_derivative`] for fallible functions.
pub fn try_one_sided_derivative(
    f: impl Fn(f64) -> Result<f64>,
    x0: f64,
    side: Side,
    cfg: &QuadConfig,
) -> Result<EvalResult> {
    cfg.validate()?;
    let sigma = match side {
        Side::Left => -1.0,
        Side::Right => 1.0,
    };
    let finite = |x: f64, y: f64| {
        if y.is_finite() {
            Ok(y)
        } else {
            Err(Error::NonFinite { x, value: y })
        }
    };
    let f0 = finite(x0, f(x0)?)?;
    let mut diffs = [0.0; 7];
    let mut fmax = f0.abs();
    for (k, d) in diffs.iter_mut().enumerate() {
        let h = cfg.deriv_step / (1u32 << k) as f64;
        let x = x0 + sigma * h;
        let y = finite(x, f(x)?)?;
        fmax = fmax.max(y.abs());
        *d = sigma * (y - f0) / h;
    }
    let rich: Vec<f64> = diffs.windows(2).map(|w| 2.0 * w[1] - w[0]).collect();
    let value = rich[5];
    let h_min = cfg.deriv_step / 64.0;
    let roundoff = 6.0 * 1e-15 * fmax.max(1.0) / h_min;
    Ok(EvalResult {
        value,
        err: (rich[5] - rich[4]).abs() + roundoff,
        evaluations: 8,
        converged: true,
    })
}
