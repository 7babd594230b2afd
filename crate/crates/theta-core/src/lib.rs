//! Continued fractions with partial quotients that are integer multiples of an
//! irrational `θ` with `θ² = 1/m` ("θ-expansions"), together with the metric
//! theory needed to study them numerically:
//!
//! * [`numerics`] — exact arithmetic in the real quadratic (and biquadratic)
//!   fields that digit extraction lives in, plus controlled conversion to
//!   floating point,
//! * [`expansion`] — the shift map `T_θ`, digit extraction, convergents and
//!   fundamental intervals,
//! * [`measures`] — the invariant measure `γ_θ`, the conditional family
//!   `γ_{θ,a}` and the extended measure on the square,
//! * [`chain`] — the digit Markov chain: transition probabilities `P_i`,
//!   inverse-CDF digit sampling and the chain fixed point,
//! * [`operator`] — the transfer operator on a grid, invariant density and
//!   decay-rate estimation,
//! * [`natural_extension`] — the invertible extension of `T_θ` on the square,
//! * [`experiments`] — seeded Monte-Carlo reproductions of the limit laws
//!   (Gauss-Kuzmin error curves, Lévy growth rate, Khinchin divergence).
//!
//! Everything exact goes through [`numerics::Surd`]; everything statistical is
//! reproducible from a single 64-bit seed.

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod chain;
pub mod error;
pub mod experiments;
pub mod expansion;
mod fit;
mod fmath;
pub mod measures;
pub mod natural_extension;
pub mod numerics;
pub mod operator;
pub mod rng;

pub use error::{Error, Result};
pub use numerics::{Rational, Surd, ThetaContext};
