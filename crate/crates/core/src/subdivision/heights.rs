//! Height functions on a point configuration.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::exact::{format_rational, int, parse_rational, Rational};

use super::config::A3_ORDER;
use super::geometry::Point;
use super::SubdivisionError;

/// A height per configuration point; `None` is `+∞` (an absent monomial).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightVector {
    values: BTreeMap<Point, Option<Rational>>,
}

impl HeightVector {
    pub fn new(values: BTreeMap<Point, Option<Rational>>) -> Self {
        HeightVector { values }
    }

    pub fn finite(values: impl IntoIterator<Item = (Point, Rational)>) -> Self {
        HeightVector {
            values: values.into_iter().map(|(p, v)| (p, Some(v))).collect(),
        }
    }

    /// Heights on A3 listed in [`A3_ORDER`].
    pub fn from_a3_order(values: &[Rational]) -> Self {
        assert_eq!(values.len(), 10);
        Self::finite(A3_ORDER.iter().copied().zip(values.iter().cloned()))
    }

    pub fn from_a3_ints(values: [i64; 10]) -> Self {
        Self::finite(A3_ORDER.iter().copied().zip(values.iter().map(|&v| int(v))))
    }

    pub fn zero_a3() -> Self {
        Self::from_a3_ints([0; 10])
    }

    /// `f(p)` on every point of A3.
    pub fn from_fn_a3(f: impl Fn(Point) -> Rational) -> Self {
        Self::finite(A3_ORDER.iter().map(|&p| (p, f(p))))
    }

    pub fn get(&self, p: Point) -> Result<Option<&Rational>, SubdivisionError> {
        self.values
            .get(&p)
            .map(Option::as_ref)
            .ok_or(SubdivisionError::MissingHeight(p))
    }

    /// Finite height at `p`, `None` if `+∞` or undefined.
    pub fn at(&self, p: Point) -> Option<&Rational> {
        self.values.get(&p).and_then(Option::as_ref)
    }

    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        self.values.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Point, Option<&Rational>)> {
        self.values.iter().map(|(p, v)| (*p, v.as_ref()))
    }

    pub fn is_all_finite(&self) -> bool {
        self.values.values().all(Option::is_some)
    }

    /// Finite heights in [`A3_ORDER`]; `None` if any is missing or infinite.
    pub fn a3_values(&self) -> Option<Vec<Rational>> {
        A3_ORDER.iter().map(|&p| self.at(p).cloned()).collect()
    }

    pub fn set(&mut self, p: Point, v: Option<Rational>) {
        self.values.insert(p, v);
    }

    pub fn map(&self, f: impl Fn(Point, &Rational) -> Rational) -> Self {
        HeightVector {
            values: self
                .values
                .iter()
                .map(|(&p, v)| (p, v.as_ref().map(|x| f(p, x))))
                .collect(),
        }
    }

    pub fn scaled(&self, k: &Rational) -> Self {
        self.map(|_, v| v * k)
    }

    /// `u + a + v·ω`.
    pub fn plus_affine(&self, a: &Rational, v: (&Rational, &Rational)) -> Self {
        self.map(|p, x| x + a + v.0 * int(p.0) + v.1 * int(p.1))
    }

    /// Pointwise sum; `+∞` absorbs.
    pub fn plus(&self, other: &Self) -> Self {
        let values = self
            .values
            .iter()
            .map(|(p, v)| {
                let w = other.values.get(p).cloned().flatten();
                (*p, v.as_ref().zip(w).map(|(a, b)| a + b))
            })
            .collect();
        HeightVector { values }
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(|v| v.as_ref().is_some_and(Zero::is_zero))
    }

    /// `{"u11": "p/q", ...}` with `"inf"` for `+∞`.
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .values
            .iter()
            .map(|(p, v)| {
                let s = v.as_ref().map_or("inf".to_string(), format_rational);
                (format!("u{}{}", p.0, p.1), serde_json::Value::String(s))
            })
            .collect();
        serde_json::Value::Object(map)
    }

    /// Heights in [`A3_ORDER`] as strings.
    pub fn to_a3_strings(&self) -> Vec<String> {
        A3_ORDER
            .iter()
            .map(|&p| match self.values.get(&p) {
                Some(Some(v)) => format_rational(v),
                _ => "inf".to_string(),
            })
            .collect()
    }

    /// Accepts an object keyed `"u00"`..`"u03"` or a ten-element array in
    /// [`A3_ORDER`]; entries are rational strings, integers or `"inf"`.
    pub fn from_json(v: &serde_json::Value) -> Result<Self, SubdivisionError> {
        let parse = |x: &serde_json::Value| -> Result<Option<Rational>, SubdivisionError> {
            match x {
                serde_json::Value::String(s) if s.trim() == "inf" => Ok(None),
                serde_json::Value::String(s) => parse_rational(s)
                    .map(Some)
                    .map_err(|e| SubdivisionError::Parse(e.to_string())),
                serde_json::Value::Number(n) if n.is_i64() => Ok(Some(int(n.as_i64().unwrap()))),
                other => Err(SubdivisionError::Parse(format!("bad height {other}"))),
            }
        };
        let mut values = BTreeMap::new();
        match v {
            serde_json::Value::Array(items) => {
                if items.len() != 10 {
                    return Err(SubdivisionError::Parse(format!(
                        "expected 10 heights, got {}",
                        items.len()
                    )));
                }
                for (p, x) in A3_ORDER.iter().zip(items) {
                    values.insert(*p, parse(x)?);
                }
            }
            serde_json::Value::Object(map) => {
                for (k, x) in map {
                    let p = parse_key(k)
                        .filter(|p| A3_ORDER.contains(p))
                        .ok_or_else(|| SubdivisionError::Parse(format!("unknown key {k}")))?;
                    values.insert(p, parse(x)?);
                }
                if let Some(p) = A3_ORDER.iter().find(|p| !values.contains_key(p)) {
                    return Err(SubdivisionError::MissingHeight(*p));
                }
            }
            other => return Err(SubdivisionError::Parse(format!("bad heights {other}"))),
        }
        Ok(HeightVector { values })
    }
}

fn parse_key(k: &str) -> Option<Point> {
    let rest = k.strip_prefix('u')?;
    let mut chars = rest.chars();
    let i = chars.next()?.to_digit(10)? as i64;
    let j = chars.next()?.to_digit(10)? as i64;
    chars.next().is_none().then_some((i, j))
}
