//! Coefficient vectors of `val_u(Δ)` and of the cycle length on a
//! secondary cone.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::exact::{int, Exponent, Rational};
use crate::subdivision::{lattice_steps, HeightVector, MarkedSubdivision, Point, A3_ORDER, CENTER};
use crate::tropcurve::{closed_form_coefficients, TropError};

use super::JinvError;

/// A linear form `u ↦ Σ c_p·u_p` valid on the cone of `subdivision`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearFormOnCone {
    pub coefficients: BTreeMap<Point, Rational>,
    pub subdivision: MarkedSubdivision,
}

impl LinearFormOnCone {
    pub fn coefficient(&self, p: Point) -> Rational {
        self.coefficients.get(&p).cloned().unwrap_or_else(Rational::zero)
    }

    /// `Σ c_p·u_p`; points with zero coefficient may have infinite height.
    pub fn value(&self, u: &HeightVector) -> Option<Rational> {
        let mut acc = Rational::zero();
        for (p, c) in &self.coefficients {
            if !c.is_zero() {
                acc += c * u.at(*p)?;
            }
        }
        Some(acc)
    }

    /// The coefficients as an exponent vector in [`A3_ORDER`], when they are
    /// nonnegative integers.
    pub fn to_exponent(&self) -> Option<Exponent> {
        A3_ORDER
            .iter()
            .map(|&p| {
                let c = self.coefficient(p);
                (c.is_integer() && c >= Rational::zero())
                    .then(|| i32::try_from(c.to_integer()).ok())
                    .flatten()
            })
            .collect::<Option<Vec<_>>>()
            .map(Exponent::new)
    }
}

/// Coefficients of `u ↦ val_u(Δ)` on the cone of the triangulation `t`.
///
/// At a point `p` this is `Σ vol` over the cells having `p` as a vertex,
/// minus the lattice lengths of the cell edges at `p` lying on the hull
/// boundary, plus 1 if `p` is a hull vertex.
pub fn eta_vector(t: &MarkedSubdivision) -> Result<LinearFormOnCone, JinvError> {
    if !t.is_triangulation() {
        return Err(JinvError::NotTriangulation);
    }
    let config = t.config();
    let boundary = t.boundary_edges();
    let mut coefficients = BTreeMap::new();
    for &p in config.points() {
        let vol: i64 = t
            .cells_with_vertex(p)
            .into_iter()
            .map(|c| t.cells()[c].volume())
            .sum();
        let edges: i64 = boundary
            .iter()
            .filter(|(_, a, b)| *a == p || *b == p)
            .map(|&(_, a, b)| lattice_steps(a, b))
            .sum();
        let corner = i64::from(config.is_hull_vertex(p));
        let eta = if vol == 0 { 0 } else { corner - edges + vol };
        coefficients.insert(p, int(eta));
    }
    Ok(LinearFormOnCone {
        coefficients,
        subdivision: t.clone(),
    })
}

/// Coefficients of the cycle length on the cone of `t`; zero away from
/// (1,1) and its neighbors.
pub fn c_vector(t: &MarkedSubdivision) -> Result<LinearFormOnCone, JinvError> {
    let pairs = closed_form_coefficients(t).map_err(|e| match e {
        TropError::NoCycle => JinvError::NoCycle,
        other => other.into(),
    })?;
    let mut coefficients: BTreeMap<Point, Rational> =
        t.config().points().iter().map(|&p| (p, Rational::zero())).collect();
    for (p, c) in pairs {
        *coefficients.entry(p).or_insert_with(Rational::zero) += c;
    }
    Ok(LinearFormOnCone {
        coefficients,
        subdivision: t.clone(),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct EtaComparison {
    pub eta: LinearFormOnCone,
    pub c: LinearFormOnCone,
    /// Points where `c = η - 12·[p = (1,1)]` fails.
    pub mismatches: Vec<Point>,
}

impl EtaComparison {
    pub fn pass(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares `c_T` with `η_T - 12·e_(1,1)`.
pub fn compare_eta_c(t: &MarkedSubdivision) -> Result<EtaComparison, JinvError> {
    let eta = eta_vector(t)?;
    let c = c_vector(t)?;
    let mismatches = t
        .config()
        .points()
        .iter()
        .copied()
        .filter(|&p| {
            let shift = if p == CENTER { int(12) } else { Rational::zero() };
            c.coefficient(p) != eta.coefficient(p) - shift
        })
        .collect();
    Ok(EtaComparison { eta, c, mismatches })
}
