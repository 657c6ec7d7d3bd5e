//! Accelerated sums: Λ(z), the log-kernel sum, exact Pochhammer integrals
//! and the unit-argument ₃F₂.

use digamma_laplace::quad::QuadConfig;
use digamma_laplace::series::{self, SeriesConfig, StirlingSign};

fn main() -> digamma_laplace::Result<()> {
    let cfg = SeriesConfig::default();

    for z in [0.0, 0.5, 1.0, 3.0] {
        let tail = series::lambda_euler(z, &cfg)?;
        let rich = series::lambda_euler_limit(z, &cfg)?;
        println!(
            "Λ({z}) = {:.15} (zeta tail)  {:.15} (extrapolated)",
            tail.value, rich.value
        );
    }

    let k = series::log_kernel_sum(1.0, &cfg)?;
    println!(
        "log-kernel sum at a = 1: {:.15}  err {:.1e}",
        k.value, k.err
    );

    for n in 1..=6 {
        println!(
            "∫₀¹ (t)_{n} dt = {} ≈ {:.15}",
            series::pochhammer_integral_exact(n)?,
            series::pochhammer_integral(n)?
        );
    }
    println!(
        "∫₀¹ (t)_40 dt / 40! ≈ {:.6e}",
        series::pochhammer_integral_scaled(40, &QuadConfig::default())?
    );

    for t in [0.0, 0.5, 1.0] {
        println!(
            "₃F₂(1,1,2−t;2,3;1) at t = {t}: {:.15}",
            series::hyp3f2_unit(t, &cfg)?.value
        );
    }

    let b = 0.5f64;
    let s = series::stirling_genfunc(2, b, StirlingSign::Signed, &cfg)?;
    println!(
        "Σ s(j,2) b^j/j! at b = {b}: {:.15}  (ln²(1+b)/2 = {:.15})",
        s.value,
        b.ln_1p().powi(2) / 2.0
    );
    Ok(())
}
