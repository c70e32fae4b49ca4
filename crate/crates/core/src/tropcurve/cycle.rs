//! The cycle around (1,1) and its length.

use num_traits::Zero;

use crate::exact::{int, Rational};
use crate::subdivision::{cross, sub, HeightVector, MarkedSubdivision, Point, CENTER};

use super::curve::{dual_curve, CurveEdge, TropicalCurve};
use super::TropError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Clockwise,
    Counterclockwise,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleReport {
    pub has_cycle: bool,
    /// (1,1) lies inside a facet shared by two cells and the length is the
    /// generalized one.
    pub generalized: bool,
    /// Neighbors of (1,1), clockwise from the positive x-direction.
    pub neighbors: Vec<Point>,
    /// Bounded edges dual to the facets at (1,1), in neighbor order.
    pub cycle_edges: Vec<CurveEdge>,
    /// Signed per-edge lengths in neighbor order.
    pub edge_lengths: Vec<Rational>,
    pub length: Rational,
}

/// Polar order counterclockwise from the positive x-axis.
fn ccw_angle_cmp(v: Point, w: Point) -> std::cmp::Ordering {
    let half = |p: Point| if p.1 > 0 || (p.1 == 0 && p.0 > 0) { 0 } else { 1 };
    half(v).cmp(&half(w)).then_with(|| 0.cmp(&cross(v, w)))
}

/// Endpoints of the cell edges at (1,1), clockwise starting from the
/// positive x-direction.
pub fn neighbors_clockwise(s: &MarkedSubdivision) -> Result<Vec<Point>, TropError> {
    let mut nbrs: Vec<Point> = Vec::new();
    for c in s.cells() {
        let vs = c.vertices();
        if let Some(i) = vs.iter().position(|&p| p == CENTER) {
            let n = vs.len();
            for p in [vs[(i + 1) % n], vs[(i + n - 1) % n]] {
                if !nbrs.contains(&p) {
                    nbrs.push(p);
                }
            }
        }
    }
    if nbrs.is_empty() {
        return Err(TropError::NoCycle);
    }
    nbrs.sort_by(|&a, &b| ccw_angle_cmp(sub(a, CENTER), sub(b, CENTER)));
    let on_axis = {
        let w = sub(nbrs[0], CENTER);
        w.1 == 0 && w.0 > 0
    };
    let rest = if on_axis { 1 } else { 0 };
    nbrs[rest..].reverse();
    Ok(nbrs)
}

fn ordered_neighbors(s: &MarkedSubdivision, o: Orientation) -> Result<Vec<Point>, TropError> {
    let mut nbrs = neighbors_clockwise(s)?;
    if o == Orientation::Counterclockwise {
        nbrs[1..].reverse();
    }
    Ok(nbrs)
}

fn coefficients_in_order(nbrs: &[Point]) -> Vec<Rational> {
    let k = nbrs.len();
    let w: Vec<Point> = nbrs.iter().map(|&p| sub(p, CENTER)).collect();
    let d = |i: usize, j: usize| int(cross(w[i % k], w[j % k]));
    (0..k)
        .map(|j| {
            let (prev, next) = (j + k - 1, j + 1);
            (d(prev, j) + d(j, next) + d(next, prev)) / (d(prev, j) * d(j, next))
        })
        .collect()
}

/// Coefficients of the cycle length as a linear form in the heights on the
/// cone of `s`: `ΣK_j` at (1,1) and `-K_j` at each neighbor.
pub fn closed_form_coefficients(s: &MarkedSubdivision) -> Result<Vec<(Point, Rational)>, TropError> {
    coefficients_oriented(s, Orientation::Clockwise)
}

fn coefficients_oriented(
    s: &MarkedSubdivision,
    o: Orientation,
) -> Result<Vec<(Point, Rational)>, TropError> {
    if !s.is_interior_vertex_visible(CENTER)? {
        return Err(TropError::NoCycle);
    }
    let nbrs = ordered_neighbors(s, o)?;
    let ks = coefficients_in_order(&nbrs);
    let total = ks.iter().fold(Rational::zero(), |acc, k| acc + k);
    let mut out = vec![(CENTER, total)];
    out.extend(nbrs.iter().zip(ks).map(|(&p, k)| (p, -k)));
    Ok(out)
}

/// The closed-form cycle length summed over neighbors in the given order.
pub fn cycle_length_oriented(u: &HeightVector, o: Orientation) -> Result<Rational, TropError> {
    let s = crate::subdivision::regular_subdivision(&crate::subdivision::PointConfig::a3(), u)?;
    let coeffs = coefficients_oriented(&s, o)?;
    Ok(coeffs.iter().fold(Rational::zero(), |acc, (p, c)| {
        acc + c * u.at(*p).expect("cell vertices have finite heights")
    }))
}

/// Closed-form cycle length, neighbors taken clockwise.
pub fn cycle_length_closed_form(u: &HeightVector) -> Result<Rational, TropError> {
    cycle_length_oriented(u, Orientation::Clockwise)
}

fn cell_between(curve: &TropicalCurve, a: Point, b: Point) -> Option<usize> {
    curve.subdivision.cells().iter().position(|c| {
        c.has_vertex(CENTER) && c.has_edge(CENTER, a) && c.has_edge(CENTER, b)
    })
}

fn edge_for_facet(curve: &TropicalCurve, a: Point, b: Point) -> Option<&CurveEdge> {
    curve
        .edges
        .iter()
        .find(|e| e.facet == (a, b) || e.facet == (b, a))
}

/// Signed per-edge lengths `(v_j - v_{j-1})·w_j^⊥ / |w_j|²`, where `v_j` is
/// the curve vertex between neighbors `j` and `j+1` and `w^⊥ = (-w_y, w_x)`.
fn signed_edge_lengths(curve: &TropicalCurve, nbrs: &[Point]) -> Vec<Rational> {
    let k = nbrs.len();
    let vertex_after = |j: usize| -> (Rational, Rational) {
        let c = cell_between(curve, nbrs[j % k], nbrs[(j + 1) % k])
            .expect("consecutive neighbors bound a cell");
        let v = &curve.vertices[c];
        (v.x.clone(), v.y.clone())
    };
    (0..k)
        .map(|j| {
            let (x1, y1) = vertex_after(j);
            let (x0, y0) = vertex_after(j + k - 1);
            let w = sub(nbrs[j], CENTER);
            let perp = (int(-w.1), int(w.0));
            ((x1 - x0) * perp.0 + (y1 - y0) * perp.1) / int(w.0 * w.0 + w.1 * w.1)
        })
        .collect()
}

/// Cycle detection and geometric length.
pub fn cycle_report(u: &HeightVector) -> Result<CycleReport, TropError> {
    let curve = dual_curve(u)?;
    let s = &curve.subdivision;
    if s.is_interior_vertex_visible(CENTER)? {
        let nbrs = neighbors_clockwise(s)?;
        let cycle_edges: Vec<CurveEdge> = nbrs
            .iter()
            .map(|&p| edge_for_facet(&curve, CENTER, p).cloned().expect("interior facet"))
            .collect();
        let edge_lengths = signed_edge_lengths(&curve, &nbrs);
        let length = cycle_edges
            .iter()
            .fold(Rational::zero(), |acc, e| acc + e.lattice_length());
        return Ok(CycleReport {
            has_cycle: true,
            generalized: false,
            neighbors: nbrs,
            cycle_edges,
            edge_lengths,
            length,
        });
    }
    if let Some(shared) = s.shared_edge_through(CENTER) {
        let (a, b) = shared.endpoints;
        let edge = edge_for_facet(&curve, a, b).cloned().expect("shared facet");
        let length = int(4) * edge.lattice_length();
        return Ok(CycleReport {
            has_cycle: false,
            generalized: true,
            neighbors: vec![],
            edge_lengths: vec![edge.lattice_length()],
            cycle_edges: vec![edge],
            length,
        });
    }
    Ok(CycleReport {
        has_cycle: false,
        generalized: false,
        neighbors: vec![],
        cycle_edges: vec![],
        edge_lengths: vec![],
        length: Rational::zero(),
    })
}

/// Four times the lattice length of the edge dual to the facet through
/// (1,1).
pub fn generalized_cycle_length(u: &HeightVector) -> Result<Rational, TropError> {
    let report = cycle_report(u)?;
    if report.has_cycle {
        return Err(TropError::HasCycle);
    }
    if !report.generalized {
        return Err(TropError::NotOnSharedFacet);
    }
    Ok(report.length)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn worked_example() -> HeightVector {
        HeightVector::from_a3_ints([0, 1, 100, 100, 1, 100, 1, 1, 3, 7])
    }

    #[test]
    fn worked_example_cycle() {
        let r = cycle_report(&worked_example()).unwrap();
        assert!(r.has_cycle);
        assert_eq!(r.length, int(5));
        assert_eq!(r.neighbors, vec![(3, 0), (0, 0), (0, 1), (1, 2)]);
        assert_eq!(r.edge_lengths, vec![int(1), int(1), int(1), int(2)]);
        assert_eq!(cycle_length_closed_form(&worked_example()).unwrap(), int(5));
        assert_eq!(
            cycle_length_oriented(&worked_example(), Orientation::Counterclockwise).unwrap(),
            int(-5)
        );
    }

    #[test]
    fn fold_through_vertical_line() {
        let u = HeightVector::from_fn_a3(|p| int((p.0 - 1).max(0)));
        let c = dual_curve(&u).unwrap();
        let mut pts: Vec<_> = c.vertices.iter().map(|v| (v.x.clone(), v.y.clone())).collect();
        pts.sort();
        assert_eq!(pts, vec![(int(-1), int(0)), (int(0), int(0))]);
        assert_eq!(generalized_cycle_length(&u).unwrap(), int(2));
        assert_eq!(generalized_cycle_length(&u.scaled(&int(3))).unwrap(), int(6));
        assert_eq!(generalized_cycle_length(&worked_example()), Err(TropError::HasCycle));
    }

    #[test]
    fn coarsest_has_no_cycle() {
        let r = cycle_report(&HeightVector::zero_a3()).unwrap();
        assert!(!r.has_cycle && !r.generalized);
        assert_eq!(r.length, int(0));
        assert_eq!(
            generalized_cycle_length(&HeightVector::zero_a3()),
            Err(TropError::NotOnSharedFacet)
        );
    }
}
