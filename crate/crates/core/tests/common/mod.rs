//! Fixtures shared by the integration test targets.

#![allow(dead_code)]

use std::f64::consts::{FRAC_PI_2, LN_2, PI};

use digamma_laplace::quad::{self, EvalResult, QuadConfig};
use digamma_laplace::Result;

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// A quadrature problem with a known value.
pub struct KnownIntegral {
    pub name: &'static str,
    pub exact: f64,
    pub run: fn(&QuadConfig) -> Result<EvalResult>,
}

/// Ten integrals with closed forms: polynomials, exponentials, logarithmic
/// endpoint singularities and two of Euler's integrals.
pub fn honesty_set() -> Vec<KnownIntegral> {
    vec![
        KnownIntegral {
            name: "∫₀¹ 1",
            exact: 1.0,
            run: |c| quad::integrate(|_| 1.0, 0.0, 1.0, c),
        },
        KnownIntegral {
            name: "∫₀¹ x³",
            exact: 0.25,
            run: |c| quad::integrate(|x| x * x * x, 0.0, 1.0, c),
        },
        KnownIntegral {
            name: "∫₀² (x² − x + 3)",
            exact: 8.0 / 3.0 - 2.0 + 6.0,
            run: |c| quad::integrate(|x| x * x - x + 3.0, 0.0, 2.0, c),
        },
        KnownIntegral {
            name: "∫₀^∞ e^{−t}",
            exact: 1.0,
            run: |c| quad::integrate_laplace(|_| 1.0, 1.0, f64::INFINITY, c),
        },
        KnownIntegral {
            name: "∫₀^∞ e^{−3t} t²",
            exact: 2.0 / 27.0,
            run: |c| quad::integrate_laplace(|t| t * t, 3.0, f64::INFINITY, c),
        },
        KnownIntegral {
            name: "∫₀¹ ln x",
            exact: -1.0,
            run: |c| quad::integrate(f64::ln, 0.0, 1.0, c),
        },
        KnownIntegral {
            name: "∫₀¹ x ln x",
            exact: -0.25,
            run: |c| quad::integrate(|x| x * x.ln(), 0.0, 1.0, c),
        },
        KnownIntegral {
            name: "∫₀¹ ln² x",
            exact: 2.0,
            run: |c| quad::integrate(|x| x.ln() * x.ln(), 0.0, 1.0, c),
        },
        KnownIntegral {
            name: "∫₀^∞ t^{−1/2} e^{−t} = √π",
            exact: PI.sqrt(),
            run: |c| quad::integrate_laplace(|t| 1.0 / t.sqrt(), 1.0, f64::INFINITY, c),
        },
        KnownIntegral {
            name: "∫₀^{π/2} ln sin x = −(π/2) ln 2",
            exact: -FRAC_PI_2 * LN_2,
            run: |c| quad::integrate_abscissa(|p| p.from_lo.sin().ln(), 0.0, FRAC_PI_2, c),
        },
    ]
}

/// The 40-point grid `0.05, 0.10, …, 2.00`.
pub fn figure_grid() -> Vec<f64> {
    (1..=40).map(|i| i as f64 * 0.05).collect()
}

/// `x²/(x² + ln²(2 cos x))`.
pub fn log_cos_ratio(x: f64) -> f64 {
    let l = (2.0 * x.cos()).ln();
    x * x / (x * x + l * l)
}
