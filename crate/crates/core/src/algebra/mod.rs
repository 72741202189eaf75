//! Exact arithmetic kernel: sparse multivariate polynomials, truncated power
//! series in `s`, Laurent expansions in `v`, binomials and interpolation.
//!
//! All of it is generic over the coefficient [`Scalar`].

mod binom;
mod interp;
mod laurent;
mod poly;
mod scalar;
mod series;

use thiserror::Error;

pub use binom::{binom_poly, int_binom, int_binom_i64};
pub use interp::{interpolate_all, lagrange_interpolate};
pub use laurent::{laplace_laurent, LaurentSeries};
pub use poly::{LaurentPoly, Monomial, MultiPoly, Var, NVARS};
pub use scalar::Scalar;
pub use series::{series_expand_rational, series_pow_symbolic, TruncatedSeries};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("{divisor} does not divide {dividend}")]
    NonExactDivision { dividend: String, divisor: String },
    #[error("negative power {var}^{exponent} left after substitution")]
    NegativeExponent { var: &'static str, exponent: i32 },
    #[error("denominator has zero constant term in s")]
    ZeroConstantTerm,
    #[error("{0}")]
    BadShape(String),
    #[error("duplicate interpolation abscissa {0}")]
    DuplicateAbscissa(String),
    #[error("need {needed} interpolation samples, got {got}")]
    TooFewSamples { needed: usize, got: usize },
    #[error("sample {index} is inconsistent with the interpolating polynomial")]
    InconsistentSamples { index: usize },
}
