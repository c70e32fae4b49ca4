//! Puiseux series over Q, valuations and t-initial forms.

mod literal;
mod polys;
mod series;

pub use literal::{parse_series, series_to_json};
pub use polys::{eval_truncated, shift_substitute, tini, tini_constant, weight};
pub use series::{PuiseuxSeries, ValuedScalar, Valuation};

use thiserror::Error;

use crate::exact::{ExactError, Rational};

/// Default number of exponent units kept beyond a leading term.
pub const DEFAULT_TRUNCATION: i64 = 40;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PuiseuxError {
    #[error("valuation undetermined: all terms below t^{0} cancelled or were truncated")]
    Indeterminate(Rational),
    #[error("the series is exactly zero")]
    ExactZero,
    #[error("invalid series literal: {0}")]
    Parse(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
