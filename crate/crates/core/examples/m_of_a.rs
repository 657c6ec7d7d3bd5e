//! M(a) by quadrature and by the branch-aware closed form.
//!
//! Run with an optional argument: `cargo run --example m_of_a -- 0.5`.

use digamma_laplace::mfunc;
use digamma_laplace::QuadConfig;

fn main() -> digamma_laplace::Result<()> {
    let cfg = QuadConfig::default();
    let points: Vec<f64> = match std::env::args().nth(1) {
        Some(a) => vec![a.parse().expect("a must be a number")],
        None => vec![0.0, 0.25, 0.5, std::f64::consts::LN_2, 1.0, 2.0],
    };
    for a in points {
        let d = mfunc::m_direct(a, &cfg)?;
        let c = if a == 0.0 {
            d
        } else {
            mfunc::m_closed(a, &cfg)?
        };
        println!(
            "M({a:.6}) = {:.15}  [{}]  closed {:.15} via {}  |diff| {:.1e}",
            d.value,
            d.branch,
            c.value,
            c.method,
            (d.value - c.value).abs()
        );
    }
    println!("M(0) closed value: {:.15}", mfunc::m_at_zero());
    Ok(())
}
