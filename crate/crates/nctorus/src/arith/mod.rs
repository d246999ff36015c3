//! Exact arithmetic: arbitrary-precision rationals, Gaussian rationals,
//! univariate polynomials over ℚ and rational functions in the modular
//! variable `s`.
//!
//! Every value is kept in a canonical form so that equality is structural:
//! rationals are reduced with a positive denominator, polynomials carry no
//! trailing zero coefficients, and rational functions are gcd-reduced with a
//! monic denominator (zero is `0/1`).

mod gauss;
mod poly;
mod rat;
mod ratfun;

pub use gauss::{gauss, gauss_i, gauss_one, gauss_real, gauss_zero, fmt_gauss, is_real, GaussRat};
pub use poly::Poly;
pub use rat::{fmt_rat, parse_rat, rat, rat_int, Rat};
pub use ratfun::RatFun;

use thiserror::Error;

/// Errors raised by exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("evaluation at a pole: s = {0}")]
    Pole(String),
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
}
