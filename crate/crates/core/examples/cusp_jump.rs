//! The slope of M drops by 4 at a = ln 2.

use std::f64::consts::LN_2;

use digamma_laplace::mfunc::{self, Branch};
use digamma_laplace::QuadConfig;

fn main() -> digamma_laplace::Result<()> {
    let cfg = QuadConfig::default();
    let j = mfunc::mprime_jump(&cfg)?;
    println!("M'(ln2-) = {:.9}  err {:.1e}", j.left.value, j.left.err);
    println!("M'(ln2+) = {:.9}  err {:.1e}", j.right.value, j.right.err);
    println!("jump     = {:.9}  err {:.1e}", j.jump.value, j.jump.err);

    let d = mfunc::mprime_jump_direct(&cfg)?;
    println!("jump from quadrature alone = {:.9}", d.jump.value);

    let below = mfunc::m_closed_forced(LN_2, Branch::Below, &cfg)?;
    let above = mfunc::m_closed_forced(LN_2, Branch::Above, &cfg)?;
    println!(
        "M(ln2) both branches: {:.15} {:.15}",
        below.value, above.value
    );
    Ok(())
}
