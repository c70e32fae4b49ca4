//! Generic valuations of the invariants and valuations of `j(f)`.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::exact::{common_denominator, int, Exponent, ExactError, Rational};
use crate::puiseux::{eval_truncated, PuiseuxSeries, ValuedScalar, Valuation, DEFAULT_TRUNCATION};
use crate::subdivision::{membership_u, HeightVector, A3_ORDER};

use super::cache::invariants;
use super::cubic::{is_exact, Cubic};
use super::invariants::{twelve_e11, Poly};
use super::JinvError;

/// Heights in [`A3_ORDER`], `None` for `+∞`.
pub fn a3_weights(u: &HeightVector) -> Result<Vec<Option<Rational>>, JinvError> {
    A3_ORDER
        .iter()
        .map(|&p| Ok(u.get(p)?.cloned()))
        .collect()
}

/// Integer weights `w·D` with the common denominator `D`, when they fit.
fn scaled_weights(w: &[Option<Rational>]) -> Option<(Vec<Option<i64>>, BigInt)> {
    let finite: Vec<Rational> = w.iter().flatten().cloned().collect();
    let d = common_denominator(&finite);
    let scaled = w
        .iter()
        .map(|x| match x {
            Some(q) => (q * Rational::from_integer(d.clone()))
                .to_integer()
                .to_i64()
                .filter(|v| v.abs() < 1 << 40)
                .map(Some),
            None => Some(None),
        })
        .collect::<Option<Vec<_>>>()?;
    Some((scaled, d))
}

/// `(u·ω)` for every term avoiding infinite heights.
fn term_weights(p: &Poly, w: &[Option<Rational>]) -> Result<Vec<(Exponent, Rational)>, JinvError> {
    if p.is_zero() {
        return Err(ExactError::ZeroPolynomial.into());
    }
    if w.len() != p.vars().len() {
        return Err(ExactError::Arity {
            expected: p.vars().len(),
            got: w.len(),
        }
        .into());
    }
    let live = |e: &Exponent| (0..w.len()).all(|i| e.get(i) == 0 || w[i].is_some());
    if let Some((scaled, d)) = scaled_weights(w) {
        let d = Rational::from_integer(d);
        return Ok(p
            .terms()
            .filter(|(e, _)| live(e))
            .map(|(e, _)| {
                let s: i128 = (0..w.len())
                    .filter(|&i| e.get(i) != 0)
                    .map(|i| e.get(i) as i128 * scaled[i].expect("live term") as i128)
                    .sum();
                (e.clone(), Rational::from_integer(BigInt::from(s)) / &d)
            })
            .collect());
    }
    Ok(p
        .terms()
        .filter(|(e, _)| live(e))
        .map(|(e, _)| {
            let s = (0..w.len())
                .filter(|&i| e.get(i) != 0)
                .fold(Rational::zero(), |acc, i| {
                    acc + w[i].as_ref().expect("live term") * int(e.get(i) as i64)
                });
            (e.clone(), s)
        })
        .collect())
}

/// `min_ω w·ω` over the support of `p`; terms involving an infinite weight
/// are skipped, and `+∞` results when all are.
pub fn generic_valuation_weights(p: &Poly, w: &[Option<Rational>]) -> Result<Valuation, JinvError> {
    Ok(term_weights(p, w)?
        .into_iter()
        .map(|(_, v)| v)
        .min()
        .map_or(Valuation::Infinity, Valuation::Finite))
}

/// Support monomials attaining [`generic_valuation_weights`].
pub fn generic_argmin_weights(p: &Poly, w: &[Option<Rational>]) -> Result<Vec<Exponent>, JinvError> {
    let tw = term_weights(p, w)?;
    let Some(m) = tw.iter().map(|(_, v)| v).min().cloned() else {
        return Ok(Vec::new());
    };
    Ok(tw.into_iter().filter(|(_, v)| *v == m).map(|(e, _)| e).collect())
}

/// Generic valuation of a polynomial in the ten cubic coefficients.
pub fn generic_valuation(p: &Poly, u: &HeightVector) -> Result<Valuation, JinvError> {
    generic_valuation_weights(p, &a3_weights(u)?)
}

pub fn generic_argmin(p: &Poly, u: &HeightVector) -> Result<Vec<Exponent>, JinvError> {
    generic_argmin_weights(p, &a3_weights(u)?)
}

/// Generic valuations of `A`, `Δ` and `j = A/Δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericJ {
    pub val_a: Valuation,
    pub val_delta: Rational,
    pub val_j: Valuation,
}

pub fn generic_j(u: &HeightVector) -> Result<GenericJ, JinvError> {
    let inv = invariants()?;
    let val_a = generic_valuation(&inv.a, u)?;
    let Valuation::Finite(val_delta) = generic_valuation(&inv.delta, u)? else {
        return Err(JinvError::GenericallySingular);
    };
    let val_j = match &val_a {
        Valuation::Finite(a) => Valuation::Finite(a - &val_delta),
        Valuation::Infinity => Valuation::Infinity,
    };
    Ok(GenericJ {
        val_a,
        val_delta,
        val_j,
    })
}

/// `val_u(A) - val_u(Δ)`.
pub fn val_j_generic(u: &HeightVector) -> Result<Valuation, JinvError> {
    Ok(generic_j(u)?.val_j)
}

/// Whether `12·e_11` attains the generic valuation of `A` at `u ∈ U`.
pub fn check_a_cone(u: &HeightVector) -> Result<bool, JinvError> {
    if !membership_u(u) {
        return Err(JinvError::NotInU);
    }
    Ok(generic_argmin(&invariants()?.a, u)?.contains(&twelve_e11()))
}

/// `A(f)`, `Δ(f)` and the resulting `j(f)`.
#[derive(Clone, Debug, PartialEq)]
pub struct JEvaluation {
    pub a: PuiseuxSeries,
    pub delta: PuiseuxSeries,
    pub j: ValuedScalar,
    /// Truncation margin that sufficed, or `None` for exact evaluation.
    pub margin: Option<Rational>,
}

/// Margins tried in turn by [`evaluate_j`]. Small margins are cheap and
/// settle most inputs; a result is only accepted when its leading term lies
/// below the truncation order, so starting small never changes the answer.
pub fn margins() -> [Rational; 5] {
    [
        int(2),
        int(8),
        int(DEFAULT_TRUNCATION),
        int(2 * DEFAULT_TRUNCATION),
        int(4 * DEFAULT_TRUNCATION),
    ]
}

fn j_from(a: PuiseuxSeries, delta: PuiseuxSeries, margin: Option<Rational>) -> Result<JEvaluation, JinvError> {
    let d = delta.valued()?;
    let Valuation::Finite(vd) = d.valuation.clone() else {
        return Err(JinvError::Singular);
    };
    let j = if a.is_exact_zero() {
        ValuedScalar {
            valuation: Valuation::Infinity,
            leading: None,
        }
    } else {
        let va = a.valued()?;
        let Valuation::Finite(v) = va.valuation else {
            unreachable!("nonzero series has a finite valuation")
        };
        ValuedScalar {
            valuation: Valuation::Finite(v - vd),
            leading: Some(va.leading.expect("finite valuation") / d.leading.expect("finite valuation")),
        }
    };
    Ok(JEvaluation { a, delta, j, margin })
}

/// `p(f)` at the first margin whose result has a determined leading term,
/// falling back to exact evaluation when the coefficients are exact.
fn settle(p: &Poly, f: &Cubic) -> Result<(PuiseuxSeries, Option<Rational>), JinvError> {
    for m in margins() {
        let v = eval_truncated(p, f.coefficients(), &m)?;
        if !v.is_indeterminate() {
            return Ok((v, Some(m)));
        }
    }
    if !is_exact(f) {
        return Err(JinvError::TruncationInsufficient);
    }
    Ok((p.eval(f.coefficients())?, None))
}

/// Valuation and leading coefficient of `j(f) = A(f)/Δ(f)`.
///
/// `A(f)` is computed as `c·S(f)³`. `Δ(f)` and `S(f)` are each truncated at
/// growing margins beyond their generic valuations; if every margin is
/// swamped by cancellation, exact coefficients are evaluated without
/// truncation.
pub fn evaluate_j(f: &Cubic) -> Result<JEvaluation, JinvError> {
    let inv = invariants()?;
    let c = inv
        .a_over_s_cubed()
        .ok_or_else(|| JinvError::Normalization("A = c·S³".into()))?;
    let (delta, m_delta) = settle(&inv.delta, f)?;
    if delta.is_exact_zero() {
        return Err(JinvError::Singular);
    }
    let (s, m_s) = settle(&inv.s, f)?;
    let margin = match (m_delta, m_s) {
        (Some(x), Some(y)) => Some(x.max(y)),
        _ => None,
    };
    j_from(s.pow(3).scale(&c), delta, margin)
}
