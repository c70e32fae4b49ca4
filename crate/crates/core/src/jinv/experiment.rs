//! The coordinate change `(x, y) ↦ (x + t^b, y)` applied to the example
//! cubic with cycle length 5.

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exact::{int, ratio, Rational};
use crate::puiseux::{tini_constant, PuiseuxSeries};
use crate::subdivision::{regular_subdivision, HeightVector, MarkedSubdivision, PointConfig};
use crate::tropcurve::{cycle_report, CycleReport};

use super::cache::invariants;
use super::cubic::{random_nonzero, Cubic, WORKED_EXAMPLE_HEIGHTS};
use super::invariants::{coefficient_poly, Poly};
use super::valuation::{evaluate_j, generic_j, GenericJ, JEvaluation};
use super::JinvError;

/// Seed for the leading coefficients of the example cubic.
pub const EXPERIMENT_SEED: u64 = 0x5eed_0004;

/// The example cubic with leading coefficients drawn from
/// [`EXPERIMENT_SEED`].
pub fn experiment_cubic() -> Cubic {
    let mut rng = ChaCha8Rng::seed_from_u64(EXPERIMENT_SEED);
    let leading: Vec<Rational> = (0..10).map(|_| random_nonzero(&mut rng)).collect();
    Cubic::worked_example(&leading).expect("ten coefficients")
}

/// `a01·a12 - a11·a02`.
pub fn cancelling_factor() -> Poly {
    coefficient_poly(0, 1)
        .mul(&coefficient_poly(1, 2))
        .and_then(|p| p.sub(&coefficient_poly(1, 1).mul(&coefficient_poly(0, 2))?))
        .expect("same variables")
}

#[derive(Clone, Debug, PartialEq)]
pub struct ShiftExperiment {
    pub b: Rational,
    pub original: Cubic,
    pub shifted: Cubic,
    pub heights: HeightVector,
    pub subdivision: MarkedSubdivision,
    /// Whether the subdivision equals the one before the shift.
    pub same_as_unshifted: bool,
    /// Whether the subdivision equals the one for shifts with `0 < b < 1`.
    pub same_as_small_shift: bool,
    pub cycle: CycleReport,
    pub generic: GenericJ,
    pub evaluated: JEvaluation,
    /// The t-initial form of `Δ` at the shifted valuations.
    pub initial_form: Poly,
    /// Whether `a01·a12 - a11·a02` divides [`Self::initial_form`].
    pub factor_divides_initial_form: bool,
    /// `a01·a12 - a11·a02` evaluated on the leading terms `lc·t^val`.
    pub factor_on_leading_terms: PuiseuxSeries,
    /// The initial form evaluated at the leading coefficients.
    pub initial_form_on_leading: Rational,
}

impl ShiftExperiment {
    /// The leading terms of `a01·a12` and `a11·a02` cancel exactly.
    pub fn factor_cancels(&self) -> bool {
        self.factor_on_leading_terms.is_exact_zero()
    }

    pub fn val_j(&self) -> Option<&Rational> {
        self.evaluated.j.valuation.finite()
    }
}

fn subdivision_for_shift(b: &Rational) -> Result<MarkedSubdivision, JinvError> {
    let shifted = experiment_cubic().shift_x(&PuiseuxSeries::monomial(int(1), b.clone()))?;
    Ok(regular_subdivision(&PointConfig::a3(), &shifted.valuations()?)?)
}

pub fn coordinate_change_experiment(b: &Rational) -> Result<ShiftExperiment, JinvError> {
    if *b <= Rational::zero() {
        return Err(JinvError::InvalidShift(b.clone()));
    }
    let inv = invariants()?;
    let original = experiment_cubic();
    let shifted = original.shift_x(&PuiseuxSeries::monomial(int(1), b.clone()))?;
    let heights = shifted.valuations()?;
    let config = PointConfig::a3();
    let subdivision = regular_subdivision(&config, &heights)?;
    let unshifted = regular_subdivision(&config, &HeightVector::from_a3_ints(WORKED_EXAMPLE_HEIGHTS))?;
    let small = subdivision_for_shift(&ratio(1, 2))?;
    let cycle = cycle_report(&heights)?;
    let generic = generic_j(&heights)?;
    let evaluated = evaluate_j(&shifted)?;

    let weights = heights
        .a3_values()
        .ok_or_else(|| JinvError::InvalidCubic("shifted cubic has a zero coefficient".into()))?;
    let initial_form = tini_constant(&inv.delta, &weights)?;
    let factor = cancelling_factor();
    let factor_divides_initial_form = initial_form.div_exact(&factor).is_ok();
    let leading_terms: Vec<PuiseuxSeries> = shifted
        .coefficients()
        .iter()
        .map(|s| {
            let v = s.valued()?;
            Ok(match (v.valuation.finite(), v.leading) {
                (Some(e), Some(c)) => PuiseuxSeries::monomial(c, e.clone()),
                _ => PuiseuxSeries::exact_zero(),
            })
        })
        .collect::<Result<_, JinvError>>()?;
    let factor_on_leading_terms = factor.eval(&leading_terms)?;
    let leading: Vec<Rational> = shifted
        .coefficients()
        .iter()
        .map(|s| s.lc().map_err(JinvError::from))
        .collect::<Result<_, _>>()?;
    let initial_form_on_leading = initial_form.eval(&leading)?;
    Ok(ShiftExperiment {
        b: b.clone(),
        original,
        same_as_unshifted: subdivision == unshifted,
        same_as_small_shift: subdivision == small,
        shifted,
        heights,
        subdivision,
        cycle,
        generic,
        evaluated,
        initial_form,
        factor_divides_initial_form,
        factor_on_leading_terms,
        initial_form_on_leading,
    })
}
