//! Vertices of Newton polytopes.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::lp::in_convex_hull;
use super::poly::{Exponent, SparsePolynomial};
use super::rational::{int, Rational};
use super::ring::Scalar;
use super::ExactError;

const PROBES: usize = 96;

/// Extreme points of `conv(points)`, in ascending graded-lex order.
///
/// Points that are the unique minimizer of a random integer functional are
/// vertices outright. Every other point is first tested against the hull of
/// the vertices found so far and, if outside it, against all other points.
pub fn newton_vertices(points: &[Exponent]) -> Vec<Exponent> {
    let pts: Vec<Exponent> = points
        .iter()
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if pts.len() <= 1 {
        return pts;
    }
    let dim = pts[0].len();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0f_7e71);
    let mut is_vertex = vec![false; pts.len()];
    for _ in 0..PROBES {
        let w: Vec<i64> = (0..dim).map(|_| rng.gen_range(-1000..=1000)).collect();
        for sign in [1i64, -1] {
            let vals: Vec<i64> = pts
                .iter()
                .map(|p| {
                    p.entries()
                        .iter()
                        .zip(&w)
                        .map(|(&e, &c)| sign * c * e as i64)
                        .sum()
                })
                .collect();
            let min = *vals.iter().min().expect("nonempty");
            let mut hits = vals.iter().enumerate().filter(|(_, &v)| v == min);
            let (i, _) = hits.next().expect("nonempty");
            if hits.next().is_none() {
                is_vertex[i] = true;
            }
        }
    }
    let as_rational = |e: &Exponent| -> Vec<Rational> {
        e.entries().iter().map(|&k| int(k as i64)).collect()
    };
    let coords: Vec<Vec<Rational>> = pts.iter().map(as_rational).collect();
    for i in 0..pts.len() {
        if is_vertex[i] {
            continue;
        }
        let known: Vec<Vec<Rational>> = (0..pts.len())
            .filter(|&k| is_vertex[k])
            .map(|k| coords[k].clone())
            .collect();
        if in_convex_hull(&coords[i], &known) {
            continue;
        }
        let others: Vec<Vec<Rational>> = (0..pts.len())
            .filter(|&k| k != i)
            .map(|k| coords[k].clone())
            .collect();
        if !in_convex_hull(&coords[i], &others) {
            is_vertex[i] = true;
        }
    }
    pts.into_iter()
        .zip(is_vertex)
        .filter_map(|(p, v)| v.then_some(p))
        .collect()
}

impl<C: Scalar> SparsePolynomial<C> {
    /// Vertices of the Newton polytope.
    pub fn newton_vertices(&self) -> Result<Vec<Exponent>, ExactError> {
        if self.is_zero() {
            return Err(ExactError::ZeroPolynomial);
        }
        Ok(newton_vertices(&self.support()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(v: &[i32]) -> Exponent {
        Exponent::new(v.to_vec())
    }

    #[test]
    fn square_with_center_and_edge_points() {
        let pts = vec![
            e(&[0, 0]),
            e(&[2, 0]),
            e(&[0, 2]),
            e(&[2, 2]),
            e(&[1, 1]),
            e(&[1, 0]),
        ];
        let v = newton_vertices(&pts);
        assert_eq!(v, vec![e(&[0, 0]), e(&[0, 2]), e(&[2, 0]), e(&[2, 2])]);
    }

    #[test]
    fn collinear_points() {
        let pts = vec![e(&[12, 0]), e(&[8, 2]), e(&[4, 4]), e(&[0, 6])];
        assert_eq!(newton_vertices(&pts), vec![e(&[0, 6]), e(&[12, 0])]);
    }
}
