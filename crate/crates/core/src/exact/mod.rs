//! Exact rationals and sparse multivariate polynomials.

mod det;
mod lp;
mod newton;
mod poly;
mod rational;
mod ring;

pub use det::det_fraction_free;
pub use lp::in_convex_hull;
pub use newton::newton_vertices;
pub use poly::{Exponent, SparsePolynomial, VariableSet};
pub use rational::{
    abs, common_denominator, format_rational, int, is_integer, parse_rational, ratio,
    rational_pow, Rational,
};
pub use ring::{Ring, Scalar};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("cannot parse rational {0:?}")]
    Parse(String),
    #[error("variable sets differ: {0} vs {1}")]
    VariableMismatch(String, String),
    #[error("no value supplied for variable {0}")]
    MissingVariable(String),
    #[error("expected {expected} values, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("polynomial division leaves a remainder")]
    NotDivisible,
    #[error("negative exponent in a non-Laurent polynomial")]
    NegativeExponent,
}
