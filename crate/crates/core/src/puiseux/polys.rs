//! Polynomials with Puiseux-series coefficients.

use num_traits::Zero;

use crate::exact::{int, Exponent, Rational, Ring, SparsePolynomial};

use super::series::{PuiseuxSeries, Valuation};
use super::PuiseuxError;

/// `f(x + s, y, ...)`, shifting the first variable.
pub fn shift_substitute(
    f: &SparsePolynomial<PuiseuxSeries>,
    s: &PuiseuxSeries,
) -> Result<SparsePolynomial<PuiseuxSeries>, PuiseuxError> {
    if f.is_laurent() {
        return Err(crate::exact::ExactError::NegativeExponent.into());
    }
    let vars = f.vars().clone();
    let max_deg = f.terms().map(|(e, _)| e.get(0)).max().unwrap_or(0) as usize;
    let mut powers = vec![PuiseuxSeries::constant(int(1))];
    for k in 1..=max_deg {
        let next = powers[k - 1].mul(s);
        powers.push(next);
    }
    let mut out = Vec::new();
    for (e, c) in f.terms() {
        let i = e.get(0) as usize;
        let mut binom = int(1);
        for k in (0..=i).rev() {
            // C(i, k) for the x^k term, walking k downward from i.
            let mut target = e.entries().to_vec();
            target[0] = k as i32;
            let coef = c.mul(&powers[i - k]).scale(&binom);
            out.push((Exponent::new(target), coef));
            if k > 0 {
                binom = binom * int(k as i64) / int((i - k + 1) as i64);
            }
        }
    }
    Ok(SparsePolynomial::from_terms(&vars, out))
}

/// `min_ω val(h_ω) + v·ω`.
pub fn weight(h: &SparsePolynomial<PuiseuxSeries>, v: &[Rational]) -> Result<Rational, PuiseuxError> {
    let mut best: Option<Rational> = None;
    for (e, c) in h.terms() {
        let Valuation::Finite(val) = c.val()? else { continue };
        let w = val + e.dot(v);
        if best.as_ref().map_or(true, |b| w < *b) {
            best = Some(w);
        }
    }
    best.ok_or(PuiseuxError::Exact(crate::exact::ExactError::ZeroPolynomial))
}

/// Sum of `lc(h_ω)·x^ω` over the terms attaining [`weight`].
pub fn tini(
    h: &SparsePolynomial<PuiseuxSeries>,
    v: &[Rational],
) -> Result<SparsePolynomial<Rational>, PuiseuxError> {
    let w = weight(h, v)?;
    let mut terms = Vec::new();
    for (e, c) in h.terms() {
        if let Valuation::Finite(val) = c.val()? {
            if val + e.dot(v) == w {
                terms.push((e.clone(), c.lc()?));
            }
        }
    }
    Ok(SparsePolynomial::from_terms(h.vars(), terms))
}

/// t-initial form of a polynomial with constant coefficients: the terms
/// minimizing `v·ω`.
pub fn tini_constant(
    h: &SparsePolynomial<Rational>,
    v: &[Rational],
) -> Result<SparsePolynomial<Rational>, PuiseuxError> {
    let m = h.min_weight(v)?;
    let terms = h
        .terms()
        .filter(|(e, _)| e.dot(v) == m)
        .map(|(e, c)| (e.clone(), c.clone()))
        .collect::<Vec<_>>();
    Ok(SparsePolynomial::from_terms(h.vars(), terms))
}

/// Evaluates `p` at series values, keeping only `margin` exponent units
/// beyond the smallest possible valuation of the result.
///
/// Every intermediate product is cut as soon as its discarded terms can no
/// longer reach below the working order, so the result is exact up to its
/// truncation order.
pub fn eval_truncated(
    p: &SparsePolynomial<Rational>,
    values: &[PuiseuxSeries],
    margin: &Rational,
) -> Result<PuiseuxSeries, PuiseuxError> {
    let n = p.vars().len();
    if values.len() != n {
        return Err(crate::exact::ExactError::Arity {
            expected: n,
            got: values.len(),
        }
        .into());
    }
    let lbs: Vec<Option<Rational>> = values.iter().map(PuiseuxSeries::lower_bound).collect();
    let live = |e: &Exponent| (0..n).all(|i| e.get(i) == 0 || lbs[i].is_some());
    let term_bound = |e: &Exponent| -> Rational {
        let mut acc = Rational::zero();
        for (i, lb) in lbs.iter().enumerate() {
            if e.get(i) != 0 {
                acc += lb.as_ref().expect("live term") * int(e.get(i) as i64);
            }
        }
        acc
    };
    let Some(floor) = p.terms().filter(|(e, _)| live(e)).map(|(e, _)| term_bound(e)).min() else {
        return Ok(PuiseuxSeries::exact_zero());
    };
    let order = &floor + margin;
    let mut max_deg = vec![0usize; n];
    for (e, _) in p.terms() {
        for (i, d) in max_deg.iter_mut().enumerate() {
            *d = (*d).max(e.get(i).max(0) as usize);
        }
    }
    let powers: Vec<Vec<PuiseuxSeries>> = (0..n)
        .map(|i| {
            let mut ps = vec![PuiseuxSeries::constant(int(1))];
            if let Some(lb) = &lbs[i] {
                let base = values[i].truncated(&(lb + margin));
                for k in 1..=max_deg[i] {
                    let cut = lb * int(k as i64) + margin;
                    let next = ps[k - 1].mul(&base).truncated(&cut);
                    ps.push(next);
                }
            }
            ps
        })
        .collect();
    let mut acc = PuiseuxSeries::big_o(order.clone());
    for (e, c) in p.terms() {
        if !live(e) {
            continue;
        }
        let mut rest = term_bound(e);
        if rest >= order {
            // Lies entirely inside O(t^order).
            continue;
        }
        let mut prod = PuiseuxSeries::constant(c.clone());
        for i in 0..n {
            let k = e.get(i);
            if k == 0 {
                continue;
            }
            rest -= lbs[i].as_ref().expect("live term") * int(k as i64);
            prod = prod.mul(&powers[i][k as usize]).truncated(&(&order - &rest));
        }
        acc = acc.plus(&prod);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{ratio, VariableSet};

    fn series(terms: &[(Rational, i64)]) -> PuiseuxSeries {
        PuiseuxSeries::from_terms(terms.iter().map(|(e, c)| (e.clone(), int(*c))).collect(), None)
    }

    #[test]
    fn shift_of_x() {
        let vars = VariableSet::new(["x", "y"]);
        let x = SparsePolynomial::<PuiseuxSeries>::var(&vars, 0);
        let t = series(&[(int(1), 1)]);
        let shifted = shift_substitute(&x, &t).unwrap();
        let expected = x.add(&SparsePolynomial::constant(&vars, t)).unwrap();
        assert_eq!(shifted, expected);
    }

    #[test]
    fn weight_with_ties() {
        let vars = VariableSet::new(["x", "y"]);
        let t = series(&[(int(1), 1)]);
        let x = SparsePolynomial::<PuiseuxSeries>::var(&vars, 0);
        let y = SparsePolynomial::<PuiseuxSeries>::var(&vars, 1);
        let tc = SparsePolynomial::constant(&vars, t);
        let h = tc
            .mul(&x)
            .unwrap()
            .add(&tc.mul(&y).unwrap())
            .unwrap()
            .add(&x.mul(&y).unwrap())
            .unwrap();
        let v = [int(1), int(1)];
        assert_eq!(weight(&h, &v).unwrap(), int(2));
        assert_eq!(tini(&h, &v).unwrap().to_string(), "x*y + x + y");
    }

    #[test]
    fn truncated_evaluation_matches_exact() {
        let vars = VariableSet::new(["x", "y"]);
        let x = SparsePolynomial::<Rational>::var(&vars, 0);
        let y = SparsePolynomial::<Rational>::var(&vars, 1);
        let p = x.pow(3).sub(&x.mul(&y).unwrap().scale(&int(2))).unwrap();
        let vx = series(&[(ratio(1, 2), 1), (int(1), 3)]);
        let vy = series(&[(int(1), -1), (ratio(7, 3), 2)]);
        let exact = p.eval(&[vx.clone(), vy.clone()]).unwrap();
        let cut = eval_truncated(&p, &[vx, vy], &int(2)).unwrap();
        let order = cut.trunc().unwrap().clone();
        assert_eq!(order, ratio(3, 2) + int(2));
        assert_eq!(exact.truncated(&order), cut);
    }
}
