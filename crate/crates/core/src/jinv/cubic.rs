//! Plane cubics `f = Σ a_ij x^i y^j` with Puiseux-series coefficients.

use rand::Rng;
use serde_json::{Map, Value};

use crate::exact::{int, ratio, Exponent, Rational, SparsePolynomial, VariableSet};
use crate::puiseux::{parse_series, series_to_json, shift_substitute, PuiseuxSeries};
use crate::subdivision::{a3_index, HeightVector, Point, A3_ORDER};

use super::JinvError;

/// Coefficient valuations of the example cubic with cycle length 5, in
/// [`A3_ORDER`].
pub const WORKED_EXAMPLE_HEIGHTS: [i64; 10] = [0, 1, 100, 100, 1, 100, 1, 1, 3, 7];

#[derive(Clone, Debug, PartialEq)]
pub struct Cubic {
    coeffs: Vec<PuiseuxSeries>,
}

fn xy_vars() -> VariableSet {
    VariableSet::new(["x", "y"])
}

fn xyz_vars() -> VariableSet {
    VariableSet::new(["x", "y", "z"])
}

impl Cubic {
    /// Coefficients listed in [`A3_ORDER`].
    pub fn new(coeffs: Vec<PuiseuxSeries>) -> Result<Self, JinvError> {
        if coeffs.len() != A3_ORDER.len() {
            return Err(JinvError::InvalidCubic(format!(
                "expected 10 coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(Cubic { coeffs })
    }

    pub fn from_rationals(coeffs: &[Rational]) -> Result<Self, JinvError> {
        Self::new(coeffs.iter().cloned().map(PuiseuxSeries::constant).collect())
    }

    /// `c_p·t^(u_p)` at each point; infinite heights give zero.
    pub fn lift(u: &HeightVector, leading: &[Rational]) -> Result<Self, JinvError> {
        let coeffs = A3_ORDER
            .iter()
            .zip(leading)
            .map(|(&p, c)| match u.get(p)? {
                Some(h) => Ok(PuiseuxSeries::monomial(c.clone(), h.clone())),
                None => Ok(PuiseuxSeries::exact_zero()),
            })
            .collect::<Result<Vec<_>, JinvError>>()?;
        Self::new(coeffs)
    }

    /// A lift with nonzero random leading coefficients and a random
    /// higher-order term on every nonzero coefficient.
    pub fn random_lift(u: &HeightVector, rng: &mut impl Rng) -> Result<Self, JinvError> {
        let mut coeffs = Vec::with_capacity(10);
        for &p in A3_ORDER.iter() {
            coeffs.push(match u.get(p)? {
                Some(h) => {
                    let lead = random_nonzero(rng);
                    let next = random_nonzero(rng);
                    let gap = ratio(rng.gen_range(1..=6), rng.gen_range(1..=3));
                    PuiseuxSeries::from_terms(vec![(h.clone(), lead), (h + gap, next)], None)
                }
                None => PuiseuxSeries::exact_zero(),
            });
        }
        Self::new(coeffs)
    }

    /// `y² + a1·xy + a3·y - x³ - a2·x² - a4·x - a6`.
    pub fn weierstrass(
        a1: PuiseuxSeries,
        a2: PuiseuxSeries,
        a3: PuiseuxSeries,
        a4: PuiseuxSeries,
        a6: PuiseuxSeries,
    ) -> Self {
        let mut c = vec![PuiseuxSeries::exact_zero(); 10];
        let mut put = |p: Point, s: PuiseuxSeries| c[a3_index(p).expect("point of A3")] = s;
        put((0, 2), PuiseuxSeries::constant(int(1)));
        put((1, 1), a1);
        put((0, 1), a3);
        put((3, 0), PuiseuxSeries::constant(int(-1)));
        put((2, 0), a2.neg());
        put((1, 0), a4.neg());
        put((0, 0), a6.neg());
        Cubic { coeffs: c }
    }

    /// The example cubic with leading coefficients `leading` (in
    /// [`A3_ORDER`]) and valuations [`WORKED_EXAMPLE_HEIGHTS`].
    pub fn worked_example(leading: &[Rational]) -> Result<Self, JinvError> {
        Self::lift(&HeightVector::from_a3_ints(WORKED_EXAMPLE_HEIGHTS), leading)
    }

    pub fn coefficients(&self) -> &[PuiseuxSeries] {
        &self.coeffs
    }

    pub fn coefficient(&self, p: Point) -> Option<&PuiseuxSeries> {
        a3_index(p).map(|k| &self.coeffs[k])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(PuiseuxSeries::is_exact_zero)
    }

    /// Coefficient valuations; exact zeros become `+∞`.
    pub fn valuations(&self) -> Result<HeightVector, JinvError> {
        let mut values = Vec::with_capacity(10);
        for s in &self.coeffs {
            values.push(match s.val() {
                Ok(v) => v.finite().cloned(),
                Err(e) => return Err(e.into()),
            });
        }
        Ok(HeightVector::new(A3_ORDER.iter().copied().zip(values).collect()))
    }

    /// The affine polynomial in `x, y`.
    pub fn to_xy(&self) -> SparsePolynomial<PuiseuxSeries> {
        let terms = A3_ORDER
            .iter()
            .zip(&self.coeffs)
            .map(|(&(i, j), c)| (Exponent::new(vec![i as i32, j as i32]), c.clone()));
        SparsePolynomial::from_terms(&xy_vars(), terms.collect::<Vec<_>>())
    }

    /// Reads back a polynomial in two variables of degree at most 3.
    pub fn from_xy(p: &SparsePolynomial<PuiseuxSeries>) -> Result<Self, JinvError> {
        let mut c = vec![PuiseuxSeries::exact_zero(); 10];
        for (e, coef) in p.terms() {
            let k = (e.len() == 2)
                .then(|| a3_index((e.get(0) as i64, e.get(1) as i64)))
                .flatten()
                .ok_or_else(|| JinvError::InvalidCubic(format!("monomial {:?}", e.entries())))?;
            c[k] = coef.clone();
        }
        Self::new(c)
    }

    /// The homogenization `Σ a_ij x^i y^j z^(3-i-j)`.
    pub fn homogeneous(&self) -> SparsePolynomial<PuiseuxSeries> {
        let terms = A3_ORDER.iter().zip(&self.coeffs).map(|(&(i, j), c)| {
            (Exponent::new(vec![i as i32, j as i32, (3 - i - j) as i32]), c.clone())
        });
        SparsePolynomial::from_terms(&xyz_vars(), terms.collect::<Vec<_>>())
    }

    /// `f(x + s, y)`.
    pub fn shift_x(&self, s: &PuiseuxSeries) -> Result<Self, JinvError> {
        Self::from_xy(&shift_substitute(&self.to_xy(), s)?)
    }

    /// `F∘g`: substitutes `(x, y, z)ᵀ ↦ g·(x, y, z)ᵀ` in the homogenization.
    pub fn transform(&self, g: &[[PuiseuxSeries; 3]; 3]) -> Result<Self, JinvError> {
        let vars = xyz_vars();
        let forms: Vec<SparsePolynomial<PuiseuxSeries>> = g
            .iter()
            .map(|row| {
                let terms = row
                    .iter()
                    .enumerate()
                    .map(|(l, c)| (Exponent::unit(3, l), c.clone()));
                SparsePolynomial::from_terms(&vars, terms.collect::<Vec<_>>())
            })
            .collect();
        let composed = self
            .homogeneous()
            .eval_with(&forms, |c| SparsePolynomial::constant(&vars, c.clone()))?;
        let mut c = vec![PuiseuxSeries::exact_zero(); 10];
        for (e, coef) in composed.terms() {
            let k = a3_index((e.get(0) as i64, e.get(1) as i64)).expect("cubic monomial");
            c[k] = coef.clone();
        }
        Self::new(c)
    }

    /// [`Cubic::transform`] with a rational matrix.
    pub fn transform_rational(&self, g: &[[Rational; 3]; 3]) -> Result<Self, JinvError> {
        let lifted = g.clone().map(|row| row.map(PuiseuxSeries::constant));
        self.transform(&lifted)
    }

    /// Values at `t = value` when every coefficient is a finite sum with
    /// integer exponents.
    pub fn at(&self, value: &Rational) -> Option<Vec<Rational>> {
        self.coeffs.iter().map(|c| c.at(value)).collect()
    }

    /// `{"a11": literal, ...}`; zero coefficients are omitted.
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        for (&(i, j), c) in A3_ORDER.iter().zip(&self.coeffs) {
            if !c.is_exact_zero() {
                m.insert(format!("a{i}{j}"), series_to_json(c));
            }
        }
        Value::Object(m)
    }

    /// Accepts an object keyed `a00`..`a30` (absent keys are zero) or a
    /// 10-element array in [`A3_ORDER`].
    pub fn from_json(v: &Value) -> Result<Self, JinvError> {
        let parse = |x: &Value| parse_series(x).map_err(JinvError::from);
        let cubic = match v {
            Value::Array(items) => Self::new(items.iter().map(parse).collect::<Result<_, _>>()?)?,
            Value::Object(m) => {
                let mut c = vec![PuiseuxSeries::exact_zero(); 10];
                for (k, x) in m {
                    let idx = parse_key(k)
                        .and_then(a3_index)
                        .ok_or_else(|| JinvError::InvalidCubic(format!("unknown key {k}")))?;
                    c[idx] = parse(x)?;
                }
                Self::new(c)?
            }
            _ => return Err(JinvError::InvalidCubic("expected an object or array".into())),
        };
        if cubic.is_zero() {
            return Err(JinvError::InvalidCubic("all coefficients are zero".into()));
        }
        Ok(cubic)
    }
}

fn parse_key(k: &str) -> Option<Point> {
    let digits = k.strip_prefix('a')?.as_bytes();
    if digits.len() != 2 || !digits.iter().all(u8::is_ascii_digit) {
        return None;
    }
    Some(((digits[0] - b'0') as i64, (digits[1] - b'0') as i64))
}

/// A nonzero rational `p/q` with `|p| ≤ 30`, `1 ≤ q ≤ 7`.
pub fn random_nonzero(rng: &mut impl Rng) -> Rational {
    loop {
        let p: i64 = rng.gen_range(-30..=30);
        if p != 0 {
            return ratio(p, rng.gen_range(1..=7));
        }
    }
}

/// Whether every coefficient is known exactly.
pub fn is_exact(f: &Cubic) -> bool {
    f.coeffs.iter().all(PuiseuxSeries::is_exact)
}
