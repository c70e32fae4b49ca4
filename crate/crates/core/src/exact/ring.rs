use std::fmt::Debug;

use num_traits::{One, Zero};

use super::rational::Rational;

/// Commutative ring operations used by evaluation and by polynomial
/// coefficients.
///
/// Constants are produced from an existing element (`zero_like`, `one_like`)
/// so that rings whose elements carry context, such as polynomials over a
/// fixed variable set, can implement the trait.
pub trait Ring: Clone + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn vanishes(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    /// The image of `q` under the canonical map Q -> R.
    fn scalar_like(&self, q: &Rational) -> Self;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }

    fn pow(&self, n: u32) -> Self {
        let mut result = self.one_like();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = result.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        result
    }
}

/// A ring with context-free constants; the coefficient rings of
/// [`SparsePolynomial`](super::SparsePolynomial).
pub trait Scalar: Ring + PartialEq {
    fn zero_scalar() -> Self;
    fn one_scalar() -> Self;
    fn from_rational(q: &Rational) -> Self;
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Zero::zero()
    }
    fn one_like(&self) -> Self {
        One::one()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scalar_like(&self, q: &Rational) -> Self {
        q.clone()
    }
}

impl Scalar for Rational {
    fn zero_scalar() -> Self {
        Zero::zero()
    }
    fn one_scalar() -> Self {
        One::one()
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}
