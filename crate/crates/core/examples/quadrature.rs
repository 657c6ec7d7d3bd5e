//! Tanh-sinh quadrature with error estimates, including endpoint
//! singularities and a semi-infinite Laplace integral.

use std::f64::consts::{FRAC_PI_2, LN_2, PI};

use digamma_laplace::quad::{self, QuadConfig};

fn main() -> digamma_laplace::Result<()> {
    let cfg = QuadConfig::default();

    let r = quad::integrate(f64::ln, 0.0, 1.0, &cfg)?;
    println!(
        "∫₀¹ ln x          = {:.16}  err {:.1e}  ({} evaluations)",
        r.value, r.err, r.evaluations
    );

    // Offsets from the endpoint avoid the cancellation in sin(x) near 0.
    let r = quad::integrate_abscissa(|p| p.from_lo.sin().ln(), 0.0, FRAC_PI_2, &cfg)?;
    println!(
        "∫₀^{{π/2}} ln sin x = {:.16}  exact {:.16}",
        r.value,
        -FRAC_PI_2 * LN_2
    );

    let r = quad::integrate_laplace(|t| 1.0 / t.sqrt(), 1.0, f64::INFINITY, &cfg)?;
    println!(
        "∫₀^∞ e^{{−t}}/√t    = {:.16}  exact {:.16}",
        r.value,
        PI.sqrt()
    );

    let tight = QuadConfig {
        rel_tol: 1e-14,
        abs_tol: 1e-15,
        ..cfg
    };
    let r = quad::integrate(|x| 1.0 / (1.0 + x * x), 0.0, 1.0, &tight)?;
    println!(
        "∫₀¹ 1/(1+x²)      = {:.16}  exact {:.16}  err {:.1e}",
        r.value,
        PI / 4.0,
        r.err
    );
    Ok(())
}
