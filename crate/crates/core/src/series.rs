//! Slowly convergent sums appearing in the closed forms, each with an
//! explicit tail treatment:
//!
//! - sums of rational or log-rational terms in `j²` get their tail from a
//!   binomial expansion into Hurwitz zeta values (`lambda_euler`,
//!   `log_kernel_sum`);
//! - sums whose terms decay like a power of `k` with known exponent are
//!   Richardson-extrapolated in the truncation index (`hyp3f2_unit`,
//!   `alt_binomial_tail`, `binomial_tail_sum`, `lambda_euler_limit`);
//! - geometric sums are truncated with an explicit majorant
//!   (`stirling_genfunc`).

use std::f64::consts::PI;

use num_rational::Ratio;
use num_traits::ToPrimitive;

use crate::error::{domain, Error, Result};
use crate::quad::{self, EvalResult, QuadConfig};
use crate::specfun::{self, Constant, STIRLING_MAX_N};
use crate::sum::{power_tail_sum, richardson_limit, Limit, Neumaier};

/// Accuracy target and work limit for the series evaluators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesConfig {
    pub target_abs_err: f64,
    pub max_terms: usize,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        Self {
            target_abs_err: 1e-10,
            max_terms: 10_000_000,
        }
    }
}

impl SeriesConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.target_abs_err > 0.0) {
            return Err(Error::Config(format!(
                "target_abs_err must be > 0, got {}",
                self.target_abs_err
            )));
        }
        if self.max_terms < 10 {
            return Err(Error::Config(format!(
                "max_terms must be >= 10, got {}",
                self.max_terms
            )));
        }
        Ok(())
    }

    /// Doubling levels available to a Richardson table starting at `n0`.
    fn levels(&self, n0: usize) -> usize {
        let mut levels = 1;
        while levels < 24 && (n0 << levels) <= self.max_terms {
            levels += 1;
        }
        levels
    }
}

fn from_limit(l: Limit, floor_target: f64) -> EvalResult {
    EvalResult {
        value: l.value,
        err: l.err,
        evaluations: l.samples,
        converged: l.converged || l.err <= floor_target,
    }
}

/// Sum `Σ_m (−w)^m · tail(m)` where `|tail(m+1)/tail(m)| ≤ 1` and
/// `w < 1/16`; returns the sum and a bound on the dropped remainder.
fn alternating_geometric(w: f64, mut tail: impl FnMut(usize) -> f64) -> (f64, f64) {
    let mut acc = Neumaier::default();
    let mut pow = 1.0;
    for m in 0..200 {
        let t = pow * tail(m);
        acc.add(t);
        if t.abs() < 1e-19 * acc.total().abs().max(1e-300) {
            return (acc.total(), t.abs() * w / (1.0 - w));
        }
        pow *= -w;
    }
    (acc.total(), (pow * tail(200)).abs())
}

/// Number of directly summed terms before switching to the zeta-expanded
/// tail; keeps `w = z²/N²` at most 1/16.
fn head_length(z: f64) -> usize {
    16usize.max((4.0 * z.abs()).ceil() as usize)
}

/// Generalised Euler constant `Λ(z) = lim_n (Σ_{j≤n} j/(j²+z²) − ln n)`.
///
/// Evaluated through the rearrangement `Λ(z) = γ − z² Σ_{j≥1} 1/(j(j²+z²))`,
/// which converges absolutely. The tail past the first `N` terms is
/// `Σ_m (−z²)^m ζ(3+2m, N)`.
pub fn lambda_euler(z: f64, cfg: &SeriesConfig) -> Result<EvalResult> {
    cfg.validate()?;
    if !z.is_finite() {
        return Err(domain("lambda_euler", z, "finite z"));
    }
    let z2 = z * z;
    let gamma = specfun::euler_gamma();
    if z2 == 0.0 {
        return Ok(EvalResult::exact(gamma));
    }
    let n = head_length(z);
    if n > cfg.max_terms {
        return Err(Error::Config(format!(
            "lambda_euler({z}) needs {n} head terms, max_terms is {}",
            cfg.max_terms
        )));
    }
    let mut head = Neumaier::default();
    for j in 1..n {
        let jf = j as f64;
        head.add(1.0 / (jf * (jf * jf + z2)));
    }
    let nf = n as f64;
    let w = z2 / (nf * nf);
    let (tail, trunc) = alternating_geometric(w, |m| {
        let s = 3.0 + 2.0 * m as f64;
        specfun::hurwitz_zeta(s, nf).expect("s > 1, q > 0") * nf.powi(2 * m as i32)
    });
    let series = head.total() + tail;
    let value = gamma - z2 * series;
    Ok(EvalResult {
        value,
        err: z2 * trunc + 8.0 * f64::EPSILON * (gamma.abs() + z2 * series.abs()),
        evaluations: n,
        converged: true,
    })
}

/// `Λ(z)` straight from its defining limit, Richardson-extrapolated in `n`.
/// Independent of [`lambda_euler`]; used as a cross-check.
pub fn lambda_euler_limit(z: f64, cfg: &SeriesConfig) -> Result<EvalResult> {
    cfg.validate()?;
    if !z.is_finite() {
        return Err(domain("lambda_euler_limit", z, "finite z"));
    }
    let z2 = z * z;
    let n0 = 8usize.max((4.0 * z.abs()).ceil() as usize);
    let mut acc = Neumaier::default();
    let mut next = 1usize;
    let lim = richardson_limit(
        |n| {
            while next <= n {
                let j = next as f64;
                acc.add(j / (j * j + z2));
                next += 1;
            }
            acc.total() - (n as f64).ln()
        },
        1.0,
        n0,
        cfg.levels(n0),
        8,
        cfg.target_abs_err,
    );
    Ok(from_limit(lim, cfg.target_abs_err))
}

/// `Σ_{j≥1} ln j / (a² + 4π² j²)` for `a > 0`.
pub fn log_kernel_sum(a: f64, cfg: &SeriesConfig) -> Result<EvalResult> {
    cfg.validate()?;
    if !(a > 0.0) || a.is_infinite() {
        return Err(domain("log_kernel_sum", a, "0 < a < ∞"));
    }
    let four_pi2 = 4.0 * PI * PI;
    let z = a / (2.0 * PI);
    let z2 = z * z;
    let n = head_length(z);
    if n > cfg.max_terms {
        return Err(Error::Config(format!(
            "log_kernel_sum({a}) needs {n} head terms, max_terms is {}",
            cfg.max_terms
        )));
    }
    let mut head = Neumaier::default();
    for j in 2..n {
        let jf = j as f64;
        head.add(jf.ln() / (a * a + four_pi2 * jf * jf));
    }
    // Σ_{j≥N} ln j / (4π² j² (1 + z²/j²)) = (1/4π²) Σ_m (−z²)^m Σ_{j≥N} ln j · j^{−2−2m}
    let nf = n as f64;
    let w = z2 / (nf * nf);
    let (tail, trunc) = alternating_geometric(w, |m| {
        let s = 2.0 + 2.0 * m as f64;
        -specfun::hurwitz_zeta_ds(s, nf).expect("s > 1, q > 0") * nf.powi(2 * m as i32)
    });
    let value = head.total() + tail / four_pi2;
    Ok(EvalResult {
        value,
        err: trunc / four_pi2 + 8.0 * f64::EPSILON * value.abs(),
        evaluations: n,
        converged: true,
    })
}

/// `∫₀¹ (t)_n dt = Σ_k |s(n,k)|/(k+1)` as an exact fraction, `n ≤ 20`.
pub fn pochhammer_integral_exact(n: usize) -> Result<Ratio<i128>> {
    if n > STIRLING_MAX_N {
        return Err(Error::Bounds {
            func: "pochhammer_integral",
            n,
            k: 0,
            max: STIRLING_MAX_N,
        });
    }
    let mut acc = Ratio::from_integer(0i128);
    for k in 0..=n {
        let s = specfun::stirling1_unsigned(n, k)? as i128;
        acc += Ratio::new(s, k as i128 + 1);
    }
    Ok(acc)
}

/// `a_n = ∫₀¹ (t)_n dt`, the coefficients of the sine expansion of
/// `x²/(x² + ln²(2 cos x))`; computed exactly then rounded.
pub fn pochhammer_integral(n: usize) -> Result<f64> {
    Ok(pochhammer_integral_exact(n)?
        .to_f64()
        .expect("finite rational"))
}

/// `a_n / n!`, for any `n`. Exact below the Stirling table limit and by
/// quadrature of `Π (t+m)/(m+1)` beyond it.
pub fn pochhammer_integral_scaled(n: usize, cfg: &QuadConfig) -> Result<f64> {
    if n <= STIRLING_MAX_N {
        let fact = (1..=n).fold(1.0f64, |acc, m| acc * m as f64);
        return Ok(pochhammer_integral(n)? / fact);
    }
    let r = quad::integrate(
        |t| (0..n).fold(1.0, |acc, m| acc * (t + m as f64) / (m + 1) as f64),
        0.0,
        1.0,
        cfg,
    )?;
    Ok(r.value)
}

/// Truncated sine expansion
/// `x sin 2x + Σ_{n=1}^{N} (−1)^{n−1} (a_n/n! − a_{n+1}/(n+1)!) x sin 2nx`
/// of `x²/(x² + ln²(2 cos x))` on `(0, π/2)`.
pub fn log_cos_ratio_expansion(x: f64, terms: usize, cfg: &QuadConfig) -> Result<f64> {
    let scaled: Vec<f64> = (0..=terms + 1)
        .map(|n| pochhammer_integral_scaled(n, cfg))
        .collect::<Result<_>>()?;
    let mut acc = Neumaier::default();
    acc.add(x * (2.0 * x).sin());
    for n in 1..=terms {
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        acc.add(sign * (scaled[n] - scaled[n + 1]) * x * (2.0 * n as f64 * x).sin());
    }
    Ok(acc.total())
}

/// `p_n(x) = Σ_{j=1}^n 2^{2j} / (2j·C(2j,j)) · x/(1+x²)^j`; `p_0 = 0`.
pub fn pole_rational(n: usize, x: f64) -> f64 {
    let r = x / (1.0 + x * x);
    let q = 1.0 / (1.0 + x * x);
    // c_j = 4^j/(2j C(2j,j)) obeys c_1 = 1, c_{j+1} = c_j · 2j/(2j+1).
    let mut c = 1.0;
    let mut pow = r;
    let mut acc = 0.0;
    for j in 1..=n {
        acc += c * pow;
        c *= 2.0 * j as f64 / (2.0 * j as f64 + 1.0);
        pow *= q;
    }
    acc
}

fn central_binomial_ratio(n: usize) -> f64 {
    // C(2n,n)/4^n = Π_{m=1}^n (2m−1)/(2m)
    (1..=n).fold(1.0, |acc, m| acc * (2 * m - 1) as f64 / (2 * m) as f64)
}

/// Closed form of `∫₀ˣ ln t / (1+t²)^{n+1} dt` for `x > 0`:
/// `C(2n,n)/4^n · [g₀(x) + p_n(x) ln x − Σ_{k<n} (arctan x + p_k(x))/(2k+1)]`
/// with `g₀(x) = ln x · arctan x − Ti₂(x)`.
pub fn imag_pole_integral(n: usize, x: f64) -> Result<f64> {
    if !(x > 0.0) || x.is_infinite() {
        return Err(domain("imag_pole_integral", x, "0 < x < ∞"));
    }
    let at = x.atan();
    let lx = x.ln();
    let g0 = lx * at - specfun::ti2(x)?;
    let corr: f64 = (0..n)
        .map(|k| (at + pole_rational(k, x)) / (2 * k + 1) as f64)
        .sum();
    Ok(central_binomial_ratio(n) * (g0 + pole_rational(n, x) * lx - corr))
}

/// The `x = 1` case written with Catalan's constant:
/// `−C(2n,n)/4^n · (G + Σ_{k<n} (π/4 + p_k(1))/(2k+1))`.
pub fn imag_pole_integral_at_one(n: usize) -> f64 {
    let g = specfun::constant(Constant::Catalan);
    let corr: f64 = (0..n)
        .map(|k| (PI / 4.0 + pole_rational(k, 1.0)) / (2 * k + 1) as f64)
        .sum();
    -central_binomial_ratio(n) * (g + corr)
}

/// Closed form of `∫₀ᵇ ln t / (1+t)^{n+1} dt` for `b > 0`, `1 ≤ n ≤ 20`,
/// through the Stirling numbers `|s(j+1, 2)|`.
pub fn real_pole_integral(n: usize, b: f64) -> Result<f64> {
    if n == 0 || n > STIRLING_MAX_N {
        return Err(Error::Bounds {
            func: "real_pole_integral",
            n,
            k: 0,
            max: STIRLING_MAX_N,
        });
    }
    if !(b > 0.0) || b.is_infinite() {
        return Err(domain("real_pole_integral", b, "0 < b < ∞"));
    }
    let nf = n as f64;
    let mut sum = 0.0;
    let mut coef = 1.0; // C(n−1, j)/j!
    let mut pow = 1.0;
    for j in 1..n {
        coef *= (n - j) as f64 / (j * j) as f64;
        pow *= b;
        sum += coef * specfun::stirling1_unsigned(j + 1, 2)? as f64 * pow;
    }
    Ok((1.0 - (1.0 + b).powi(-(n as i32))) * b.ln() / nf
        - b.ln_1p() / nf
        - sum / (nf * (1.0 + b).powi(n as i32 - 1)))
}

/// `₃F₂(1, 1, 2−t; 2, 3; 1)` by direct summation for `t > −1`.
///
/// The terms decay like `k^{−(t+2)}`, so the partial sums are extrapolated
/// in the truncation index with exponents `t+1, t+2, …`.
pub fn hyp3f2_unit(t: f64, cfg: &SeriesConfig) -> Result<EvalResult> {
    cfg.validate()?;
    if !(t > -1.0) || !t.is_finite() {
        return Err(domain(
            "hyp3f2_unit",
            t,
            "t > −1 (convergence at unit argument)",
        ));
    }
    // T_0 = 1, T_{k+1}/T_k = (k+2−t)(k+1)/((k+2)(k+3)).
    let mut term = 1.0;
    let lim = power_tail_sum(
        |k| {
            let cur = term;
            let kf = k as f64;
            term *= (kf + 2.0 - t) * (kf + 1.0) / ((kf + 2.0) * (kf + 3.0));
            cur
        },
        0,
        t + 1.0,
        32,
        cfg.levels(32),
        cfg.target_abs_err,
    );
    Ok(from_limit(lim, cfg.target_abs_err))
}

/// `Σ_{ν≥1} (−1)^ν/ν · C(t, ν+j)` for `t > 0`.
///
/// For `ν > t − j` the summands keep one sign and decay like `ν^{−t−2}`;
/// the partial sums are Richardson-extrapolated with exponent `t+1`.
/// Accuracy is only promised to `max(target, 1e-6)`.
pub fn alt_binomial_tail(t: f64, j: usize, cfg: &SeriesConfig) -> Result<EvalResult> {
    cfg.validate()?;
    if !(t > 0.0) || !t.is_finite() {
        return Err(domain("alt_binomial_tail", t, "t > 0"));
    }
    let mut binom = specfun::gen_binomial(t, j + 1);
    let lim = power_tail_sum(
        |nu| {
            let n = nu + j; // current binomial index
            let sign = if nu % 2 == 0 { 1.0 } else { -1.0 };
            let cur = sign * binom / nu as f64;
            binom *= (t - n as f64) / (n + 1) as f64;
            cur
        },
        1,
        t + 1.0,
        64,
        cfg.levels(64),
        cfg.target_abs_err,
    );
    Ok(from_limit(lim, cfg.target_abs_err.max(1e-6)))
}

/// `Σ_{m≥1} (−1)^{m−1} C(t+1, m+k+1)` for `t > −1`.
pub fn binomial_tail_sum(t: f64, k: usize, cfg: &SeriesConfig) -> Result<EvalResult> {
    cfg.validate()?;
    if !(t > -1.0) || !t.is_finite() {
        return Err(domain("binomial_tail_sum", t, "t > −1"));
    }
    let mut binom = specfun::gen_binomial(t + 1.0, k + 2);
    let lim = power_tail_sum(
        |m| {
            let n = m + k + 1;
            let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
            let cur = sign * binom;
            binom *= (t + 1.0 - n as f64) / (n + 1) as f64;
            cur
        },
        1,
        t + 1.0,
        64,
        cfg.levels(64),
        cfg.target_abs_err,
    );
    Ok(from_limit(lim, cfg.target_abs_err))
}

/// Largest `k` accepted by [`stirling_genfunc`].
pub const STIRLING_GF_MAX_K: usize = 8;

/// Sign convention for [`stirling_genfunc`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StirlingSign {
    /// `s(j,k) = (−1)^{j−k} |s(j,k)|`; the sum is `ln^k(1+b)/k!`.
    Signed,
    /// `|s(j,k)|`; the sum is `(−ln(1−b))^k/k!`.
    Unsigned,
}

/// `Σ_{j≥k} s(j,k) b^j / j!` for `0 < b < 1`, `k ≤ 8`, with the Stirling
/// numbers signed or unsigned according to `sign`.
///
/// The scaled numbers `|s(j,k)|/j!` come from the float recurrence
/// `c(j+1,k) = (j c(j,k) + c(j,k−1))/(j+1)`, so `j` is not limited by the
/// exact table. The truncation error is bounded with
/// `|s(j,k)|/j! ≤ (1 + ln j)^{k−1} / ((k−1)! j)`.
pub fn stirling_genfunc(
    k: usize,
    b: f64,
    sign: StirlingSign,
    cfg: &SeriesConfig,
) -> Result<EvalResult> {
    cfg.validate()?;
    if k > STIRLING_GF_MAX_K {
        return Err(Error::Bounds {
            func: "stirling_genfunc",
            n: k,
            k,
            max: STIRLING_GF_MAX_K,
        });
    }
    if !(b > 0.0 && b < 1.0) {
        return Err(domain("stirling_genfunc", b, "0 < b < 1"));
    }
    if k == 0 {
        return Ok(EvalResult::exact(1.0));
    }
    let fact_km1 = (1..k).fold(1.0, |acc, m| acc * m as f64);
    let majorant = |j: usize| {
        let jf = j as f64;
        b.powf(jf) * (1.0 + jf.ln()).powi(k as i32 - 1) / (fact_km1 * jf)
    };
    // Stop once the majorant terms are far below the target and decreasing.
    let mut upto = k + 1;
    while upto < cfg.max_terms
        && (majorant(upto + 1) > 1e-3 * cfg.target_abs_err * (1.0 - b)
            || majorant(upto + 2) > majorant(upto + 1))
    {
        upto += 1;
    }
    // c[i] = |s(j,i)|/j! for the current j, i = 0..=k.
    let mut c = vec![0.0; k + 1];
    c[0] = 1.0;
    let mut acc = Neumaier::default();
    let mut pow = 1.0;
    for j in 0..upto {
        // advance c to row j+1
        for i in (1..=k).rev() {
            c[i] = (j as f64 * c[i] + c[i - 1]) / (j + 1) as f64;
        }
        c[0] = 0.0;
        pow *= b;
        if j + 1 >= k {
            let flip = sign == StirlingSign::Signed && (j + 1 - k) % 2 == 1;
            acc.add(if flip { -c[k] * pow } else { c[k] * pow });
        }
    }
    let mut tail = 0.0;
    let mut j = upto + 1;
    loop {
        let t = majorant(j);
        tail += t;
        if t < 1e-30 || j > upto + 1_000_000 {
            break;
        }
        j += 1;
    }
    let value = acc.total();
    Ok(EvalResult {
        value,
        err: tail + 4.0 * f64::EPSILON * value.abs(),
        evaluations: upto,
        converged: tail <= cfg.target_abs_err,
    })
}
