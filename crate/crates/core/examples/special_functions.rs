//! Digamma, log-gamma, zeta values and the named constants.

use digamma_laplace::specfun::{self, Constant};

fn main() -> digamma_laplace::Result<()> {
    for x in [0.25, 0.5, 1.0, 2.5, 10.0] {
        println!(
            "x = {x:5}  lnΓ(x) = {:+.15}  ψ(x) = {:+.15}",
            specfun::ln_gamma(x)?,
            specfun::digamma(x)?
        );
    }
    println!();
    for c in Constant::ALL {
        println!("{:<13} {:.16}", c.name(), specfun::constant(c));
    }
    println!();
    println!("ζ(3)        = {:.16}", specfun::zeta(3.0)?);
    println!("ζ(3, 0.5)   = {:.16}", specfun::hurwitz_zeta(3.0, 0.5)?);
    println!("E₁(1)       = {:.16}", specfun::incomplete_gamma0(1.0)?);
    println!("Ti₂(1)      = {:.16}", specfun::ti2(1.0)?);
    println!("|s(10, 3)|  = {}", specfun::stirling1_unsigned(10, 3)?);
    Ok(())
}
