//! Truncated Puiseux series with rational exponents.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exact::{common_denominator, int, Rational, Ring, Scalar};

use super::PuiseuxError;

/// A valuation: a rational or `+∞`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Valuation {
    Finite(Rational),
    Infinity,
}

impl Valuation {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinity => None,
        }
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
            (Valuation::Finite(_), Valuation::Infinity) => Ordering::Less,
            (Valuation::Infinity, Valuation::Finite(_)) => Ordering::Greater,
            (Valuation::Infinity, Valuation::Infinity) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinity => write!(f, "inf"),
        }
    }
}

/// Valuation together with the leading coefficient (absent at `+∞`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuedScalar {
    pub valuation: Valuation,
    pub leading: Option<Rational>,
}

/// `Σ c_e t^e + O(t^trunc)`.
///
/// Terms are sorted by strictly increasing exponent, carry nonzero
/// coefficients and lie below `trunc`. `trunc == None` means the series is
/// known exactly. A series with no terms is the exact zero when `trunc` is
/// `None` and indeterminate otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PuiseuxSeries {
    terms: Vec<(Rational, Rational)>,
    trunc: Option<Rational>,
}

fn min_trunc(a: Option<Rational>, b: Option<Rational>) -> Option<Rational> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl PuiseuxSeries {
    pub fn exact_zero() -> Self {
        PuiseuxSeries {
            terms: Vec::new(),
            trunc: None,
        }
    }

    /// `O(t^trunc)`.
    pub fn big_o(trunc: Rational) -> Self {
        PuiseuxSeries {
            terms: Vec::new(),
            trunc: Some(trunc),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, Rational::zero())
    }

    /// `c·t^e`.
    pub fn monomial(c: Rational, e: Rational) -> Self {
        Self::from_terms(vec![(e, c)], None)
    }

    /// Builds a normalized series: sorts, merges equal exponents, drops zero
    /// coefficients and anything at or above `trunc`.
    pub fn from_terms(terms: Vec<(Rational, Rational)>, trunc: Option<Rational>) -> Self {
        let mut terms = terms;
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(Rational, Rational)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match merged.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => merged.push((e, c)),
            }
        }
        merged.retain(|(e, c)| !c.is_zero() && trunc.as_ref().map_or(true, |t| e < t));
        PuiseuxSeries {
            terms: merged,
            trunc,
        }
    }

    pub fn terms(&self) -> &[(Rational, Rational)] {
        &self.terms
    }

    pub fn trunc(&self) -> Option<&Rational> {
        self.trunc.as_ref()
    }

    pub fn is_exact(&self) -> bool {
        self.trunc.is_none()
    }

    pub fn is_exact_zero(&self) -> bool {
        self.terms.is_empty() && self.trunc.is_none()
    }

    pub fn is_indeterminate(&self) -> bool {
        self.terms.is_empty() && self.trunc.is_some()
    }

    pub fn val(&self) -> Result<Valuation, PuiseuxError> {
        match (self.terms.first(), &self.trunc) {
            (Some((e, _)), _) => Ok(Valuation::Finite(e.clone())),
            (None, None) => Ok(Valuation::Infinity),
            (None, Some(t)) => Err(PuiseuxError::Indeterminate(t.clone())),
        }
    }

    pub fn lc(&self) -> Result<Rational, PuiseuxError> {
        match (self.terms.first(), &self.trunc) {
            (Some((_, c)), _) => Ok(c.clone()),
            (None, None) => Err(PuiseuxError::ExactZero),
            (None, Some(t)) => Err(PuiseuxError::Indeterminate(t.clone())),
        }
    }

    pub fn valued(&self) -> Result<ValuedScalar, PuiseuxError> {
        let valuation = self.val()?;
        let leading = self.terms.first().map(|(_, c)| c.clone());
        Ok(ValuedScalar { valuation, leading })
    }

    /// Smallest exponent that may carry a nonzero coefficient: the valuation
    /// if known, else the truncation order; `None` for the exact zero.
    pub fn lower_bound(&self) -> Option<Rational> {
        match self.terms.first() {
            Some((e, _)) => Some(e.clone()),
            None => self.trunc.clone(),
        }
    }

    /// Common denominator of the stored exponents.
    pub fn ramification_index(&self) -> BigInt {
        common_denominator(self.terms.iter().map(|(e, _)| e))
    }

    /// Forgets everything at or above `order`.
    pub fn truncated(&self, order: &Rational) -> Self {
        let trunc = min_trunc(self.trunc.clone(), Some(order.clone()));
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e < order)
            .cloned()
            .collect();
        PuiseuxSeries { terms, trunc }
    }

    /// Keeps `margin` worth of exponents past the lower bound.
    pub fn truncated_relative(&self, margin: &Rational) -> Self {
        match self.lower_bound() {
            Some(lb) => self.truncated(&(lb + margin)),
            None => self.clone(),
        }
    }

    /// Coefficient of `t^e`, or `None` when it lies beyond the truncation.
    pub fn coefficient(&self, e: &Rational) -> Option<Rational> {
        if self.trunc.as_ref().is_some_and(|t| e >= t) {
            return None;
        }
        Some(
            self.terms
                .iter()
                .find(|(x, _)| x == e)
                .map(|(_, c)| c.clone())
                .unwrap_or_else(Rational::zero),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let trunc = min_trunc(self.trunc.clone(), other.trunc.clone());
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let pick = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match pick {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a[i].1 + &b[j].1;
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        if let Some(t) = &trunc {
            out.retain(|(e, _)| e < t);
        }
        PuiseuxSeries { terms: out, trunc }
    }

    pub fn neg(&self) -> Self {
        PuiseuxSeries {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
            trunc: self.trunc.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::exact_zero();
        }
        PuiseuxSeries {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
            trunc: self.trunc.clone(),
        }
    }

    /// Multiplies by `t^e`.
    pub fn shift(&self, e: &Rational) -> Self {
        PuiseuxSeries {
            terms: self.terms.iter().map(|(x, c)| (x + e, c.clone())).collect(),
            trunc: self.trunc.as_ref().map(|t| t + e),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_exact_zero() || other.is_exact_zero() {
            return Self::exact_zero();
        }
        let bound = |lb: Option<Rational>, t: &Option<Rational>| match (lb, t) {
            (Some(l), Some(t)) => Some(l + t),
            _ => None,
        };
        let trunc = min_trunc(
            bound(self.lower_bound(), &other.trunc),
            bound(other.lower_bound(), &self.trunc),
        );
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1 + e2;
                if trunc.as_ref().is_some_and(|t| &e >= t) {
                    break;
                }
                prods.push((e, c1 * c2));
            }
        }
        Self::from_terms(prods, trunc)
    }

    pub fn pow(&self, n: u32) -> Self {
        Ring::pow(self, n)
    }

    /// Evaluates at `t = value` when every exponent is an integer.
    pub fn at(&self, value: &Rational) -> Option<Rational> {
        if !self.is_exact() {
            return None;
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            if !e.is_integer() {
                return None;
            }
            let k = e.to_integer();
            let k: i64 = k.try_into().ok()?;
            acc += c * crate::exact::rational_pow(value, k);
        }
        Some(acc)
    }
}

impl Ring for PuiseuxSeries {
    fn zero_like(&self) -> Self {
        Self::exact_zero()
    }
    fn one_like(&self) -> Self {
        Self::constant(Rational::one())
    }
    fn vanishes(&self) -> bool {
        self.is_exact_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn scalar_like(&self, q: &Rational) -> Self {
        Self::constant(q.clone())
    }
}

impl Scalar for PuiseuxSeries {
    fn zero_scalar() -> Self {
        Self::exact_zero()
    }
    fn one_scalar() -> Self {
        Self::constant(Rational::one())
    }
    fn from_rational(q: &Rational) -> Self {
        Self::constant(q.clone())
    }
}

impl From<Rational> for PuiseuxSeries {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for PuiseuxSeries {
    fn from(c: i64) -> Self {
        Self::constant(int(c))
    }
}

impl fmt::Display for PuiseuxSeries {
    /// `3/2*t^(1/2) - t + O(t^5)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in &self.terms {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let mono = if e.is_zero() {
                String::new()
            } else if e.is_one() {
                "t".to_string()
            } else if e.is_integer() && !e.is_negative() {
                format!("t^{e}")
            } else {
                format!("t^({e})")
            };
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{mag}*{mono}")?,
            }
        }
        match (&self.trunc, first) {
            (Some(t), true) => write!(f, "O(t^({t}))"),
            (Some(t), false) => write!(f, " + O(t^({t}))"),
            (None, true) => write!(f, "0"),
            (None, false) => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn t(e: Rational) -> PuiseuxSeries {
        PuiseuxSeries::monomial(int(1), e)
    }

    #[test]
    fn valuation_and_leading_coefficient() {
        let s = t(ratio(1, 2)).add(&t(int(1)));
        assert_eq!(s.val().unwrap(), Valuation::Finite(ratio(1, 2)));
        assert_eq!(s.lc().unwrap(), int(1));
        assert_eq!(PuiseuxSeries::exact_zero().val().unwrap(), Valuation::Infinity);
        let c = PuiseuxSeries::monomial(int(3), int(5))
            .sub(&PuiseuxSeries::monomial(int(3), int(5)))
            .add(&t(int(7)));
        assert_eq!(c.val().unwrap(), Valuation::Finite(int(7)));
    }

    #[test]
    fn indeterminate_is_an_error() {
        let s = PuiseuxSeries::big_o(int(3));
        assert_eq!(s.val(), Err(PuiseuxError::Indeterminate(int(3))));
        let a = PuiseuxSeries::from_terms(vec![(int(1), int(2))], Some(int(4)));
        let b = PuiseuxSeries::from_terms(vec![(int(1), int(-2))], Some(int(4)));
        assert!(a.add(&b).is_indeterminate());
    }

    #[test]
    fn products() {
        let one = PuiseuxSeries::constant(int(1));
        let p = one.add(&t(int(1))).mul(&one.sub(&t(int(1))));
        assert_eq!(p.to_string(), "1 - t^2");
        assert_eq!(t(ratio(1, 3)).pow(3), t(int(1)));
        let c = PuiseuxSeries::from_terms(vec![(int(0), int(2)), (int(1), int(5))], None);
        let shifted = c.mul(&t(ratio(3, 2)));
        assert_eq!(shifted.to_string(), "2*t^(3/2) + 5*t^(5/2)");
    }

    #[test]
    fn truncation_propagates() {
        let a = PuiseuxSeries::from_terms(vec![(int(1), int(1))], Some(int(3)));
        let b = PuiseuxSeries::from_terms(vec![(int(2), int(1))], Some(int(10)));
        let p = a.mul(&b);
        // min(1 + 10, 2 + 3)
        assert_eq!(p.trunc(), Some(&int(5)));
        assert_eq!(a.add(&b).trunc(), Some(&int(3)));
        assert_eq!(a.mul(&PuiseuxSeries::exact_zero()), PuiseuxSeries::exact_zero());
    }
}
