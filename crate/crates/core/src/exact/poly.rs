//! Sparse multivariate (Laurent) polynomials over a [`Scalar`] ring.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::rational::{int, Rational};
use super::ring::{Ring, Scalar};
use super::ExactError;

/// Dense exponent vector, one entry per variable of the owning
/// [`VariableSet`]. Ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Exponent(Vec<i32>);

impl Exponent {
    pub fn new(entries: Vec<i32>) -> Self {
        Exponent(entries)
    }

    pub fn zeros(n: usize) -> Self {
        Exponent(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Exponent(e)
    }

    pub fn entries(&self) -> &[i32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> i32 {
        self.0[i]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    pub fn plus(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn minus(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scaled(&self, k: i32) -> Exponent {
        Exponent(self.0.iter().map(|a| a * k).collect())
    }

    /// Componentwise `self <= other`.
    pub fn divides(&self, other: &Exponent) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `Σ weights[i] * self[i]`.
    pub fn dot(&self, weights: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (&e, w) in self.0.iter().zip(weights) {
            if e != 0 {
                acc += w * int(e as i64);
            }
        }
        acc
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<i32>> for Exponent {
    fn from(v: Vec<i32>) -> Self {
        Exponent(v)
    }
}

/// Ordered, shared list of variable names.
#[derive(Clone, Debug)]
pub struct VariableSet(Arc<[String]>);

impl VariableSet {
    pub fn new<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        VariableSet(names.into_iter().map(Into::into).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

impl PartialEq for VariableSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for VariableSet {}

impl fmt::Display for VariableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.join(","))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SparsePolynomial<C> {
    vars: VariableSet,
    terms: BTreeMap<Exponent, C>,
    laurent: bool,
}

impl<C: Scalar> SparsePolynomial<C> {
    pub fn zero(vars: &VariableSet) -> Self {
        SparsePolynomial {
            vars: vars.clone(),
            terms: BTreeMap::new(),
            laurent: false,
        }
    }

    pub fn constant(vars: &VariableSet, c: C) -> Self {
        Self::monomial(vars, Exponent::zeros(vars.len()), c)
    }

    pub fn one(vars: &VariableSet) -> Self {
        Self::constant(vars, C::one_scalar())
    }

    pub fn var(vars: &VariableSet, i: usize) -> Self {
        Self::monomial(vars, Exponent::unit(vars.len(), i), C::one_scalar())
    }

    pub fn monomial(vars: &VariableSet, exp: Exponent, c: C) -> Self {
        Self::from_terms(vars, std::iter::once((exp, c)))
    }

    /// Sums the given terms; repeated exponents accumulate. Any negative
    /// exponent marks the result as Laurent.
    pub fn from_terms<I>(vars: &VariableSet, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, C)>,
    {
        let mut map: BTreeMap<Exponent, C> = BTreeMap::new();
        let mut laurent = false;
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent length must match variables");
            laurent |= !e.is_nonnegative();
            match map.get_mut(&e) {
                Some(existing) => *existing = existing.plus(&c),
                None => {
                    map.insert(e, c);
                }
            }
        }
        map.retain(|_, c| !c.vanishes());
        SparsePolynomial {
            vars: vars.clone(),
            terms: map,
            laurent,
        }
    }

    pub fn with_laurent(mut self, laurent: bool) -> Self {
        self.laurent = laurent || self.terms.keys().any(|e| !e.is_nonnegative());
        self
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    pub fn is_laurent(&self) -> bool {
        self.laurent
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &C)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &Exponent) -> Option<&C> {
        self.terms.get(e)
    }

    /// Exponents in ascending graded-lex order.
    pub fn support(&self) -> Vec<Exponent> {
        self.terms.keys().cloned().collect()
    }

    pub fn leading_term(&self) -> Option<(&Exponent, &C)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(Exponent::degree).max()
    }

    /// The common degree of all terms, if there is one.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut degs = self.terms.keys().map(Exponent::degree);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    fn check_vars(&self, other: &Self) -> Result<(), ExactError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(ExactError::VariableMismatch(
                self.vars.to_string(),
                other.vars.to_string(),
            ))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_vars(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            match terms.get_mut(e) {
                Some(existing) => {
                    let s = existing.plus(c);
                    if s.vanishes() {
                        terms.remove(e);
                    } else {
                        *existing = s;
                    }
                }
                None => {
                    terms.insert(e.clone(), c.clone());
                }
            }
        }
        Ok(SparsePolynomial {
            vars: self.vars.clone(),
            terms,
            laurent: self.laurent || other.laurent,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coefficients(|c| c.negated())
    }

    pub fn scale(&self, k: &C) -> Self {
        self.map_coefficients(|c| c.times(k))
    }

    pub fn map_coefficients<D: Scalar>(&self, f: impl Fn(&C) -> D) -> SparsePolynomial<D> {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), f(c)))
            .filter(|(_, c)| !c.vanishes())
            .collect();
        SparsePolynomial {
            vars: self.vars.clone(),
            terms,
            laurent: self.laurent,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_vars(other)?;
        let mut acc: HashMap<Exponent, C> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let prod = c1.times(c2);
                let e = e1.plus(e2);
                match acc.get_mut(&e) {
                    Some(existing) => *existing = existing.plus(&prod),
                    None => {
                        acc.insert(e, prod);
                    }
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.vanishes()).collect();
        Ok(SparsePolynomial {
            vars: self.vars.clone(),
            terms,
            laurent: self.laurent || other.laurent,
        })
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one(&self.vars).with_laurent(self.laurent);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same variables");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same variables");
            }
        }
        result
    }

    /// `∂/∂x_i`.
    pub fn partial_derivative(&self, i: usize) -> Self {
        let terms = self.terms.iter().filter_map(|(e, c)| {
            let k = e.get(i);
            if k == 0 {
                return None;
            }
            let mut d = e.0.clone();
            d[i] -= 1;
            Some((Exponent(d), c.times(&C::from_rational(&int(k as i64)))))
        });
        Self::from_terms(&self.vars, terms.collect::<Vec<_>>()).with_laurent(self.laurent)
    }

    /// Evaluates with coefficients mapped into `R` by `embed`.
    pub fn eval_with<R: Ring>(
        &self,
        values: &[R],
        embed: impl Fn(&C) -> R,
    ) -> Result<R, ExactError> {
        if values.len() != self.vars.len() {
            return Err(ExactError::Arity {
                expected: self.vars.len(),
                got: values.len(),
            });
        }
        let mut max_deg = vec![0usize; values.len()];
        for e in self.terms.keys() {
            for (i, &k) in e.0.iter().enumerate() {
                if k < 0 {
                    return Err(ExactError::NegativeExponent);
                }
                max_deg[i] = max_deg[i].max(k as usize);
            }
        }
        let powers: Vec<Vec<R>> = values
            .iter()
            .zip(&max_deg)
            .map(|(v, &d)| {
                let mut p = Vec::with_capacity(d + 1);
                p.push(v.one_like());
                for k in 1..=d {
                    let next = p[k - 1].times(v);
                    p.push(next);
                }
                p
            })
            .collect();
        let mut acc = embed(&C::zero_scalar());
        for (e, c) in &self.terms {
            let mut term = embed(c);
            for (i, &k) in e.0.iter().enumerate() {
                if k > 0 {
                    term = term.times(&powers[i][k as usize]);
                }
            }
            acc = acc.plus(&term);
        }
        Ok(acc)
    }

    /// Evaluates at named values; every variable must be assigned.
    pub fn eval_named_with<R: Ring>(
        &self,
        assignment: &HashMap<String, R>,
        embed: impl Fn(&C) -> R,
    ) -> Result<R, ExactError> {
        let values = self
            .vars
            .names()
            .iter()
            .map(|n| {
                assignment
                    .get(n)
                    .cloned()
                    .ok_or_else(|| ExactError::MissingVariable(n.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        self.eval_with(&values, embed)
    }

    /// Re-expresses the polynomial over `target`, sending variable `i` to
    /// `target` variable `mapping[i]`.
    pub fn relabel(&self, target: &VariableSet, mapping: &[usize]) -> Self {
        let terms = self.terms.iter().map(|(e, c)| {
            let mut v = vec![0; target.len()];
            for (i, &k) in e.0.iter().enumerate() {
                v[mapping[i]] += k;
            }
            (Exponent(v), c.clone())
        });
        Self::from_terms(target, terms.collect::<Vec<_>>()).with_laurent(self.laurent)
    }
}

impl SparsePolynomial<Rational> {
    /// Evaluates at values in any ring containing Q.
    pub fn eval<R: Ring>(&self, values: &[R]) -> Result<R, ExactError> {
        let Some(like) = values.first() else {
            return Err(ExactError::Arity {
                expected: self.vars.len(),
                got: 0,
            });
        };
        let like = like.clone();
        self.eval_with(values, |c| like.scalar_like(c))
    }

    pub fn eval_named<R: Ring>(&self, assignment: &HashMap<String, R>) -> Result<R, ExactError> {
        let like = assignment.values().next().cloned().ok_or_else(|| {
            ExactError::MissingVariable(self.vars.names().first().cloned().unwrap_or_default())
        })?;
        self.eval_named_with(assignment, |c| like.scalar_like(c))
    }

    /// Exact quotient `self / divisor`; fails if the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, ExactError> {
        self.check_vars(divisor)?;
        let (lead_e, lead_c) = divisor.leading_term().ok_or(ExactError::ZeroPolynomial)?;
        let lead_e = lead_e.clone();
        let lead_inv = lead_c.recip();
        let allow_negative = self.laurent || divisor.laurent;
        let mut rem = self.terms.clone();
        let mut quot: BTreeMap<Exponent, Rational> = BTreeMap::new();
        while let Some((e, c)) = rem.iter().next_back() {
            if !allow_negative && !lead_e.divides(e) {
                return Err(ExactError::NotDivisible);
            }
            let qe = e.minus(&lead_e);
            let qc = c * &lead_inv;
            for (de, dc) in &divisor.terms {
                let te = qe.plus(de);
                let tc = &qc * dc;
                match rem.get_mut(&te) {
                    Some(existing) => {
                        *existing -= &tc;
                        if existing.is_zero() {
                            rem.remove(&te);
                        }
                    }
                    None => {
                        rem.insert(te, -tc);
                    }
                }
            }
            quot.insert(qe, qc);
            if allow_negative && quot.len() > self.terms.len() * (divisor.terms.len() + 1) + 64 {
                return Err(ExactError::NotDivisible);
            }
        }
        Ok(SparsePolynomial {
            vars: self.vars.clone(),
            terms: quot,
            laurent: allow_negative,
        })
    }

    /// Integer gcd of numerators over lcm of denominators, positive.
    pub fn content(&self) -> Rational {
        use num_integer::Integer;
        let mut num = num_bigint::BigInt::zero();
        let mut den = num_bigint::BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        Rational::new(num, den)
    }

    /// `min_{ω ∈ support} weights·ω`.
    pub fn min_weight(&self, weights: &[Rational]) -> Result<Rational, ExactError> {
        self.terms
            .keys()
            .map(|e| e.dot(weights))
            .min()
            .ok_or(ExactError::ZeroPolynomial)
    }

    /// Exponents attaining [`min_weight`](Self::min_weight).
    pub fn argmin_weight(&self, weights: &[Rational]) -> Result<Vec<Exponent>, ExactError> {
        let m = self.min_weight(weights)?;
        Ok(self
            .terms
            .keys()
            .filter(|e| e.dot(weights) == m)
            .cloned()
            .collect())
    }
}

impl<C: Scalar> Ring for SparsePolynomial<C> {
    fn zero_like(&self) -> Self {
        Self::zero(&self.vars)
    }
    fn one_like(&self) -> Self {
        Self::one(&self.vars)
    }
    fn vanishes(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other).expect("ring operation on mismatched variables")
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other).expect("ring operation on mismatched variables")
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn scalar_like(&self, q: &Rational) -> Self {
        Self::constant(&self.vars, C::from_rational(q))
    }
}

/// Writes `x^a*y^b`, or nothing for the constant monomial.
pub(crate) fn format_monomial(vars: &VariableSet, e: &Exponent) -> String {
    let mut parts = Vec::new();
    for (i, &k) in e.entries().iter().enumerate() {
        match k {
            0 => {}
            1 => parts.push(vars.name(i).to_string()),
            _ => parts.push(format!("{}^{}", vars.name(i), k)),
        }
    }
    parts.join("*")
}

impl fmt::Display for SparsePolynomial<Rational> {
    /// Terms in descending graded-lex order, e.g. `x^2 - 3/2*x*y + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono = format_monomial(&self.vars, e);
            let mag = c.abs();
            if n == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{mag}*{mono}")?,
            }
        }
        Ok(())
    }
}
