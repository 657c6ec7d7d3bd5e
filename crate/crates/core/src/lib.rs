//! Numerics for the Laplace transform of the digamma function
//!
//! ```text
//! L(a) = ∫₀^∞ e^{-as} ψ(s+1) ds
//! ```
//!
//! and for the trigonometric-logarithmic integral
//!
//! ```text
//! M(a) = (4/π) ∫₀^{π/2} x² / (x² + ln²(2 e^{-a} cos x)) dx,
//! ```
//!
//! which satisfy `M(a) = L(a) + γ/a` for `a > ln 2` and have a separate
//! closed form on `0 < a ≤ ln 2`. `M` is continuous at `ln 2` but its slope
//! drops by exactly 4 there.
//!
//! The crate is organised bottom-up:
//!
//! - [`specfun`]: real special functions and constants (ψ, lnΓ, ζ, ζ′, E₁,
//!   Ti₂, Stirling numbers of the first kind).
//! - [`quad`]: tanh-sinh quadrature with error estimates, Laplace integrals
//!   on `[0, ∞)`, one-sided Richardson derivatives.
//! - [`series`]: the slowly convergent sums that appear in the closed forms,
//!   each with an explicit tail treatment.
//! - [`mfunc`]: `M(a)` by quadrature and in closed form, `L(a)`, Laplace
//!   moments of lnΓ and the cusp at `ln 2`.
//! - [`registry`]: a fixed catalog of identities, each checked by two
//!   independent computational routes.
//! - [`cli`]: the `dlap` command line.
//!
//! See the `examples/` directory of this crate for one runnable program per
//! capability.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod mfunc;
pub mod quad;
pub mod registry;
pub mod series;
pub mod specfun;
mod sum;

pub use error::{Error, Result};
pub use mfunc::{Branch, BranchContext, MResult, Method};
pub use quad::{EvalResult, QuadConfig, Side};
pub use series::SeriesConfig;
