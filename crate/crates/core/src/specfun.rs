//! Real-argument special functions and constants.
//!
//! Everything here works on positive real arguments only; there are no
//! reflection formulas. Constants and tables are computed once on first
//! use and cached.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{domain, Error, Result};
use crate::sum::{alternating_cvz, Neumaier};

/// Bernoulli numbers `B_2, B_4, …, B_30`.
const BERNOULLI_EVEN: [f64; 15] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
];

/// Largest order stored in the Stirling table. `|s(20,1)| = 19!` still fits
/// in a `u64`, and so does the row sum `20!`.
pub const STIRLING_MAX_N: usize = 20;

/// Named mathematical constants used throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Constant {
    /// Euler–Mascheroni constant γ.
    Gamma,
    /// ln 2π.
    LnTwoPi,
    /// Catalan's constant G.
    Catalan,
    /// ζ(3).
    Zeta3,
    /// ζ′(2).
    ZetaPrime2,
    /// `A = ln 2π + γ`.
    BigA,
}

impl Constant {
    pub const ALL: [Constant; 6] = [
        Constant::Gamma,
        Constant::LnTwoPi,
        Constant::Catalan,
        Constant::Zeta3,
        Constant::ZetaPrime2,
        Constant::BigA,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Constant::Gamma => "gamma",
            Constant::LnTwoPi => "ln_two_pi",
            Constant::Catalan => "catalan",
            Constant::Zeta3 => "zeta3",
            Constant::ZetaPrime2 => "zeta_prime_2",
            Constant::BigA => "big_a",
        }
    }
}

impl fmt::Display for Constant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Constant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Constant::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownConstant(s.to_string()))
    }
}

struct Constants {
    gamma: f64,
    ln_two_pi: f64,
    catalan: f64,
    zeta3: f64,
    zeta_prime_2: f64,
}

fn constants() -> &'static Constants {
    static CELL: OnceLock<Constants> = OnceLock::new();
    CELL.get_or_init(|| Constants {
        gamma: euler_gamma_em(),
        ln_two_pi: (2.0 * PI).ln(),
        catalan: (hurwitz_zeta_pair(2.0, 0.25).0 - hurwitz_zeta_pair(2.0, 0.75).0) / 16.0,
        zeta3: hurwitz_zeta_pair(3.0, 1.0).0,
        zeta_prime_2: hurwitz_zeta_pair(2.0, 1.0).1,
    })
}

/// γ = H_n − ln n − 1/(2n) + Σ B_{2k}/(2k n^{2k}) at n = 10.
fn euler_gamma_em() -> f64 {
    let n = 10.0_f64;
    let mut acc = Neumaier::default();
    for k in 1..=10 {
        acc.add(1.0 / k as f64);
    }
    acc.add(-n.ln());
    acc.add(-0.5 / n);
    let inv_n2 = 1.0 / (n * n);
    let mut pow = inv_n2;
    for (i, b) in BERNOULLI_EVEN.iter().take(10).enumerate() {
        let two_k = 2.0 * (i + 1) as f64;
        acc.add(b / two_k * pow);
        pow *= inv_n2;
    }
    acc.total()
}

/// Value of a named constant.
pub fn constant(name: Constant) -> f64 {
    let c = constants();
    match name {
        Constant::Gamma => c.gamma,
        Constant::LnTwoPi => c.ln_two_pi,
        Constant::Catalan => c.catalan,
        Constant::Zeta3 => c.zeta3,
        Constant::ZetaPrime2 => c.zeta_prime_2,
        Constant::BigA => c.ln_two_pi + c.gamma,
    }
}

/// Shorthand for γ.
pub fn euler_gamma() -> f64 {
    constants().gamma
}

/// Hurwitz zeta `ζ(s, q)` together with `∂ζ/∂s`, by Euler–Maclaurin
/// summation with the first 12 terms summed directly.
fn hurwitz_zeta_pair(s: f64, q: f64) -> (f64, f64) {
    const HEAD: usize = 12;
    let mut val = Neumaier::default();
    let mut der = Neumaier::default();
    for n in 0..HEAD {
        let x = n as f64 + q;
        let p = x.powf(-s);
        val.add(p);
        der.add(-x.ln() * p);
    }
    let x = HEAD as f64 + q;
    let lx = x.ln();
    let xs = x.powf(-s);
    let x1s = x * xs;
    // ∫_X^∞ x^{-s} dx and the half end-point term.
    val.add(x1s / (s - 1.0));
    der.add(-lx * x1s / (s - 1.0) - x1s / ((s - 1.0) * (s - 1.0)));
    val.add(0.5 * xs);
    der.add(-0.5 * lx * xs);

    // Σ B_{2k}/(2k)! (s)_{2k-1} X^{-s-2k+1}, and its s-derivative.
    let mut rising = s; // (s)_{2k-1}
    let mut drising = 1.0 / s; // Σ_{i<2k-1} 1/(s+i)
    let mut xpow = xs / x; // X^{-s-2k+1}
    let mut fact = 2.0; // (2k)!
    for (i, b) in BERNOULLI_EVEN.iter().enumerate() {
        let k = i + 1;
        let t = b / fact * rising * xpow;
        val.add(t);
        der.add(t * (drising - lx));
        // advance k → k+1
        let m = (2 * k - 1) as f64;
        rising *= (s + m) * (s + m + 1.0);
        drising += 1.0 / (s + m) + 1.0 / (s + m + 1.0);
        xpow /= x * x;
        fact *= (2 * k + 1) as f64 * (2 * k + 2) as f64;
    }
    (val.total(), der.total())
}

/// Riemann zeta for real `s > 1`.
pub fn zeta(s: f64) -> Result<f64> {
    if !(s > 1.0) {
        return Err(domain("zeta", s, "s > 1"));
    }
    Ok(hurwitz_zeta_pair(s, 1.0).0)
}

/// Derivative `ζ′(s)` for real `s > 1`.
pub fn zeta_prime(s: f64) -> Result<f64> {
    if !(s > 1.0) {
        return Err(domain("zeta_prime", s, "s > 1"));
    }
    Ok(hurwitz_zeta_pair(s, 1.0).1)
}

/// Hurwitz zeta `ζ(s, q) = Σ_{n≥0} (n+q)^{-s}` for `s > 1`, `q > 0`.
pub fn hurwitz_zeta(s: f64, q: f64) -> Result<f64> {
    if !(s > 1.0) {
        return Err(domain("hurwitz_zeta", s, "s > 1"));
    }
    if !(q > 0.0) {
        return Err(domain("hurwitz_zeta", q, "q > 0"));
    }
    Ok(hurwitz_zeta_pair(s, q).0)
}

/// `∂ζ(s, q)/∂s = −Σ_{n≥0} ln(n+q) (n+q)^{-s}` for `s > 1`, `q > 0`.
pub fn hurwitz_zeta_ds(s: f64, q: f64) -> Result<f64> {
    if !(s > 1.0) {
        return Err(domain("hurwitz_zeta_ds", s, "s > 1"));
    }
    if !(q > 0.0) {
        return Err(domain("hurwitz_zeta_ds", q, "q > 0"));
    }
    Ok(hurwitz_zeta_pair(s, q).1)
}

/// Coefficients `(-1)^k (ζ(k) − 1)/k`, k = 2.., of the Taylor series of
/// `lnΓ(1+z) + γz − z + ln(1+z)`.
fn lngamma_taylor() -> &'static [f64] {
    static CELL: OnceLock<Vec<f64>> = OnceLock::new();
    CELL.get_or_init(|| {
        (2..=40)
            .map(|k| {
                let kf = k as f64;
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                sign * hurwitz_zeta_pair(kf, 2.0).0 / kf
            })
            .collect()
    })
}

/// `lnΓ(1+z) − (z − ln(1+z))` for |z| ≤ 1/2, i.e.
/// `−γz + Σ_{k≥2} (−1)^k (ζ(k)−1) z^k / k`.
fn lngamma_near_one(z: f64) -> f64 {
    let coeffs = lngamma_taylor();
    let mut pow = z * z;
    let mut acc = 0.0;
    for c in coeffs {
        let t = c * pow;
        acc += t;
        if t.abs() < 1e-18 * acc.abs() {
            break;
        }
        pow *= z;
    }
    -euler_gamma() * z + acc
}

/// Natural log of the gamma function for `x > 0`.
///
/// Uses a Taylor series about 1 and 2 on `[0.5, 2.5)` (so the zeros at 1 and
/// 2 keep full relative accuracy), downward recurrence into that window for
/// `x < 10`, and the Stirling series with Bernoulli corrections above.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || x.is_infinite() {
        return Err(domain("ln_gamma", x, "0 < x < ∞"));
    }
    if x < 0.5 {
        // lnΓ(x) = lnΓ(1+x) − ln x
        return Ok(ln_gamma_window(x + 1.0) - x.ln());
    }
    if x < 2.5 {
        return Ok(ln_gamma_window(x));
    }
    if x < 10.0 {
        let mut y = x;
        let mut prod = 1.0;
        while y >= 2.5 {
            y -= 1.0;
            prod *= y;
        }
        return Ok(ln_gamma_window(y) + prod.ln());
    }
    Ok(ln_gamma_stirling(x))
}

fn ln_gamma_window(x: f64) -> f64 {
    if x < 1.5 {
        let z = x - 1.0;
        lngamma_near_one(z) + (z - z.ln_1p())
    } else {
        // lnΓ(2+z) = lnΓ(1+z) + ln(1+z), and the two logs cancel.
        let z = x - 2.0;
        lngamma_near_one(z) + z
    }
}

fn ln_gamma_stirling(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut pow = inv;
    let mut corr = 0.0;
    for (i, b) in BERNOULLI_EVEN.iter().take(10).enumerate() {
        let k = (i + 1) as f64;
        corr += b / (2.0 * k * (2.0 * k - 1.0)) * pow;
        pow *= inv2;
    }
    (x - 0.5) * x.ln() - x + 0.5 * constants().ln_two_pi + corr
}

/// Digamma ψ(x) = Γ′(x)/Γ(x) for `x > 0`.
///
/// Upward recurrence to `x ≥ 10`, then the asymptotic series with ten
/// Bernoulli terms.
pub fn digamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || x.is_infinite() {
        return Err(domain("digamma", x, "0 < x < ∞"));
    }
    let mut shift = Neumaier::default();
    let mut y = x;
    while y < 10.0 {
        shift.add(-1.0 / y);
        y += 1.0;
    }
    let inv2 = 1.0 / (y * y);
    let mut pow = inv2;
    let mut asym = y.ln() - 0.5 / y;
    for (i, b) in BERNOULLI_EVEN.iter().take(10).enumerate() {
        asym -= b / (2.0 * (i + 1) as f64) * pow;
        pow *= inv2;
    }
    shift.add(asym);
    Ok(shift.total())
}

/// `Γ(0, a) = E₁(a) = ∫₁^∞ e^{-at}/t dt` for `a > 0`.
pub fn incomplete_gamma0(a: f64) -> Result<f64> {
    if !(a > 0.0) || a.is_infinite() {
        return Err(domain("incomplete_gamma0", a, "0 < a < ∞"));
    }
    if a <= 1.0 {
        // −γ − ln a + Σ_{k≥1} (−1)^{k+1} a^k / (k·k!)
        let mut term = 1.0;
        let mut acc = Neumaier::default();
        for k in 1..60 {
            let kf = k as f64;
            term *= -a / kf;
            let t = -term / kf;
            acc.add(t);
            if t.abs() < 1e-18 {
                break;
            }
        }
        acc.add(-euler_gamma());
        acc.add(-a.ln());
        return Ok(acc.total());
    }
    // Continued fraction, modified Lentz.
    let tiny = 1e-300;
    let mut b = a + 1.0;
    let mut c = 1.0 / tiny;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..1000 {
        let an = -((i * i) as f64);
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        let del = c * d;
        h *= del;
        if (del - 1.0).abs() < 1e-16 {
            break;
        }
    }
    Ok(h * (-a).exp())
}

/// Generalised binomial coefficient `C(t, k) = t(t−1)…(t−k+1)/k!`.
pub fn gen_binomial(t: f64, k: usize) -> f64 {
    let mut acc = 1.0;
    for m in 0..k {
        acc *= (t - m as f64) / (m + 1) as f64;
    }
    acc
}

/// Rising factorial `(t)_n = t(t+1)…(t+n−1)`.
pub fn pochhammer(t: f64, n: usize) -> f64 {
    (0..n).fold(1.0, |acc, m| acc * (t + m as f64))
}

fn stirling_table() -> &'static [[u64; STIRLING_MAX_N + 1]; STIRLING_MAX_N + 1] {
    static CELL: OnceLock<[[u64; STIRLING_MAX_N + 1]; STIRLING_MAX_N + 1]> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut t = [[0u64; STIRLING_MAX_N + 1]; STIRLING_MAX_N + 1];
        t[0][0] = 1;
        for n in 0..STIRLING_MAX_N {
            for k in 1..=n + 1 {
                t[n + 1][k] = n as u64 * t[n][k] + t[n][k - 1];
            }
        }
        t
    })
}

/// Unsigned Stirling number of the first kind `|s(n, k)|`, exact.
pub fn stirling1_unsigned(n: usize, k: usize) -> Result<u64> {
    if n > STIRLING_MAX_N || k > n {
        return Err(Error::Bounds {
            func: "stirling1_unsigned",
            n,
            k,
            max: STIRLING_MAX_N,
        });
    }
    Ok(stirling_table()[n][k])
}

/// Inverse tangent integral `Ti₂(x) = ∫₀ˣ arctan(t)/t dt` for `x ≥ 0`.
///
/// For `x ≤ 1` the alternating series `Σ (−1)^k x^{2k+1}/(2k+1)²` is
/// summed with CVZ acceleration; larger `x` use
/// `Ti₂(x) = Ti₂(1/x) + (π/2) ln x`.
pub fn ti2(x: f64) -> Result<f64> {
    if !(x >= 0.0) || x.is_infinite() {
        return Err(domain("ti2", x, "0 ≤ x < ∞"));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x > 1.0 {
        return Ok(ti2_unit(1.0 / x) + FRAC_PI_2 * x.ln());
    }
    Ok(ti2_unit(x))
}

fn ti2_unit(x: f64) -> f64 {
    let x2 = x * x;
    let mut pow = x;
    let mut last = 0;
    alternating_cvz(40, |k| {
        while last < k {
            pow *= x2;
            last += 1;
        }
        let d = (2 * k + 1) as f64;
        pow / (d * d)
    })
}

/// Harmonic number `H_n`, with `H_0 = 0`.
pub fn harmonic(n: usize) -> f64 {
    let mut acc = Neumaier::default();
    for m in 1..=n {
        acc.add(1.0 / m as f64);
    }
    acc.total()
}
