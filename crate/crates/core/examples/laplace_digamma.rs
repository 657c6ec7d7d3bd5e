//! L(a), the Laplace transform of ψ(s+1), and its relation to M(a).

use digamma_laplace::mfunc;
use digamma_laplace::specfun;
use digamma_laplace::QuadConfig;

fn main() -> digamma_laplace::Result<()> {
    let cfg = QuadConfig::default();
    let gamma = specfun::euler_gamma();
    println!(
        "{:>6} {:>20} {:>20} {:>20}",
        "a", "L(a)", "L(a) + γ/a", "M(a)"
    );
    for a in [0.25, 0.5, 0.75, 1.0, 2.0, 5.0, 10.0] {
        let l = mfunc::l_direct(a, &cfg)?.value;
        let m = mfunc::m_direct(a, &cfg)?.value;
        println!("{a:>6} {l:>20.15} {:>20.15} {m:>20.15}", l + gamma / a);
    }
    println!("\nThe last two columns agree only for a ≥ ln 2.");
    Ok(())
}
