//! The j-invariant of plane cubics over Puiseux series and its valuation.

mod cache;
mod cubic;
mod eta;
mod experiment;
mod invariants;
mod theorem;
mod valuation;

pub use cache::{
    default_cache_path, deserialize, invariants, load_or_build, serialize, write_cache, CACHE_ENV,
    CACHE_FILE_NAME,
};
pub use cubic::{is_exact, random_nonzero, Cubic, WORKED_EXAMPLE_HEIGHTS};
pub use eta::{c_vector, compare_eta_c, eta_vector, EtaComparison, LinearFormOnCone};
pub use experiment::{
    cancelling_factor, coordinate_change_experiment, experiment_cubic, ShiftExperiment,
    EXPERIMENT_SEED,
};
pub use invariants::*;
pub use theorem::{verify_main_theorem, MainTheoremReport, TheoremCase};
pub use valuation::{
    a3_weights, check_a_cone, evaluate_j, generic_argmin, generic_argmin_weights, generic_j,
    generic_valuation, generic_valuation_weights, margins, val_j_generic, GenericJ, JEvaluation,
};

use thiserror::Error;

use crate::exact::{ExactError, Rational};
use crate::puiseux::PuiseuxError;
use crate::subdivision::SubdivisionError;
use crate::tropcurve::TropError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JinvError {
    #[error("failed to construct invariants: {0}")]
    Construction(String),
    #[error("normalization check failed for {0}")]
    Normalization(String),
    #[error("invariants cache: {0}")]
    Cache(String),
    #[error("invalid cubic: {0}")]
    InvalidCubic(String),
    #[error("the discriminant vanishes exactly: the cubic is singular")]
    Singular,
    #[error("every term of the discriminant involves a zero coefficient")]
    GenericallySingular,
    #[error("truncation insufficient: cancellation exhausted the known terms")]
    TruncationInsufficient,
    #[error("heights are not in U")]
    NotInU,
    #[error("not a triangulation")]
    NotTriangulation,
    #[error("(1,1) is not a vertex of the subdivision")]
    NoCycle,
    #[error("shift exponent must be positive, got {0}")]
    InvalidShift(Rational),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Puiseux(#[from] PuiseuxError),
    #[error(transparent)]
    Subdivision(#[from] SubdivisionError),
    #[error(transparent)]
    Trop(#[from] TropError),
}
