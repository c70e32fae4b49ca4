//! Regular marked subdivisions from lower hulls of lifted points.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::exact::{int, Rational};

use super::config::PointConfig;
use super::geometry::{convex_hull, locate, on_segment, orient, twice_area, Location, Point};
use super::heights::HeightVector;
use super::SubdivisionError;

/// A polygon with its marked lattice points.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MarkedCell {
    vertices: Vec<Point>,
    marked: Vec<Point>,
}

impl MarkedCell {
    /// Normalizes to a counterclockwise vertex cycle starting at the
    /// smallest vertex, with sorted marked points.
    pub fn new(points: &[Point], marked: &[Point]) -> Self {
        let vertices = convex_hull(points);
        let mut marked = marked.to_vec();
        marked.sort();
        marked.dedup();
        MarkedCell { vertices, marked }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn marked(&self) -> &[Point] {
        &self.marked
    }

    pub fn is_triangle(&self) -> bool {
        self.vertices.len() == 3
    }

    pub fn has_vertex(&self, p: Point) -> bool {
        self.vertices.contains(&p)
    }

    pub fn is_marked(&self, p: Point) -> bool {
        self.marked.binary_search(&p).is_ok()
    }

    /// Twice the Euclidean area, i.e. the normalized lattice volume.
    pub fn volume(&self) -> i64 {
        twice_area(&self.vertices)
    }

    /// Directed edges `(v_i, v_{i+1})`, counterclockwise.
    pub fn edges(&self) -> Vec<(Point, Point)> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| (self.vertices[i], self.vertices[(i + 1) % n]))
            .collect()
    }

    pub fn has_edge(&self, a: Point, b: Point) -> bool {
        self.edges()
            .iter()
            .any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a))
    }

    pub fn location(&self, p: Point) -> Location {
        locate(&self.vertices, p)
    }

    pub fn contains_cell(&self, other: &MarkedCell) -> bool {
        other
            .vertices
            .iter()
            .all(|&v| self.location(v) != Location::Outside)
    }
}

/// An edge shared by two cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SharedEdge {
    pub cells: (usize, usize),
    pub endpoints: (Point, Point),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedSubdivision {
    cells: Vec<MarkedCell>,
    config: PointConfig,
}

impl MarkedSubdivision {
    pub fn new(config: PointConfig, cells: Vec<MarkedCell>) -> Self {
        let mut cells = cells;
        cells.sort();
        cells.dedup();
        MarkedSubdivision { cells, config }
    }

    /// The single cell `(conv A, A)`.
    pub fn coarsest(config: &PointConfig) -> Self {
        let cell = MarkedCell::new(config.points(), config.points());
        Self::new(config.clone(), vec![cell])
    }

    pub fn cells(&self) -> &[MarkedCell] {
        &self.cells
    }

    pub fn config(&self) -> &PointConfig {
        &self.config
    }

    pub fn is_triangulation(&self) -> bool {
        self.cells.iter().all(|c| {
            c.is_triangle() && {
                let mut v = c.vertices.clone();
                v.sort();
                v == c.marked
            }
        })
    }

    /// Union of the marked sets.
    pub fn marked_points(&self) -> BTreeSet<Point> {
        self.cells.iter().flat_map(|c| c.marked.iter().copied()).collect()
    }

    pub fn uses_all_points(&self) -> bool {
        self.marked_points().len() == self.config.points().len()
    }

    /// Indices of cells having `p` as a polygon vertex.
    pub fn cells_with_vertex(&self, p: Point) -> Vec<usize> {
        (0..self.cells.len())
            .filter(|&i| self.cells[i].has_vertex(p))
            .collect()
    }

    /// Edges common to two cells.
    pub fn shared_edges(&self) -> Vec<SharedEdge> {
        let mut out = Vec::new();
        for i in 0..self.cells.len() {
            for (a, b) in self.cells[i].edges() {
                for j in i + 1..self.cells.len() {
                    if self.cells[j].has_edge(a, b) {
                        out.push(SharedEdge {
                            cells: (i, j),
                            endpoints: (a, b),
                        });
                    }
                }
            }
        }
        out
    }

    /// Cell edges lying on the boundary of the configuration's hull.
    pub fn boundary_edges(&self) -> Vec<(usize, Point, Point)> {
        let mut out = Vec::new();
        for (i, c) in self.cells.iter().enumerate() {
            for (a, b) in c.edges() {
                let hull = self.config.hull();
                let n = hull.len();
                let on_hull = (0..n).any(|k| {
                    on_segment(hull[k], hull[(k + 1) % n], a)
                        && on_segment(hull[k], hull[(k + 1) % n], b)
                });
                if on_hull {
                    out.push((i, a, b));
                }
            }
        }
        out
    }

    fn require_interior(&self, p: Point) -> Result<(), SubdivisionError> {
        if self.config.location(p) == Location::Interior {
            Ok(())
        } else {
            Err(SubdivisionError::NotInterior(p))
        }
    }

    /// Whether the interior point `p` is a vertex of some cell.
    pub fn is_interior_vertex_visible(&self, p: Point) -> Result<bool, SubdivisionError> {
        self.require_interior(p)?;
        Ok(self.cells.iter().any(|c| c.has_vertex(p)))
    }

    /// The shared edge whose relative interior contains `p`, if any.
    pub fn shared_edge_through(&self, p: Point) -> Option<SharedEdge> {
        self.shared_edges().into_iter().find(|e| {
            let (a, b) = e.endpoints;
            on_segment(a, b, p) && p != a && p != b
        })
    }

    /// Whether every cell of `coarse` is subdivided by the cells of `self`
    /// it contains, with no point marked in `self` that `coarse` leaves
    /// unmarked.
    pub fn is_refinement_of(&self, coarse: &MarkedSubdivision) -> Result<bool, SubdivisionError> {
        if self.config != coarse.config {
            return Err(SubdivisionError::ConfigMismatch);
        }
        for big in &coarse.cells {
            let inside: Vec<&MarkedCell> =
                self.cells.iter().filter(|c| big.contains_cell(c)).collect();
            let area: i64 = inside.iter().map(|c| c.volume()).sum();
            if area != big.volume() {
                return Ok(false);
            }
            if inside
                .iter()
                .any(|c| c.marked.iter().any(|&m| !big.is_marked(m)))
            {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `{"cells":[{"vertices":[[i,j],...],"marked":[[i,j],...]},...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let cells: Vec<serde_json::Value> = self
            .cells
            .iter()
            .map(|c| {
                serde_json::json!({
                    "vertices": c.vertices.iter().map(|p| [p.0, p.1]).collect::<Vec<_>>(),
                    "marked": c.marked.iter().map(|p| [p.0, p.1]).collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::json!({ "cells": cells })
    }

    pub fn from_json(config: &PointConfig, v: &serde_json::Value) -> Result<Self, SubdivisionError> {
        #[derive(serde::Deserialize)]
        struct CellJson {
            vertices: Vec<[i64; 2]>,
            marked: Vec<[i64; 2]>,
        }
        #[derive(serde::Deserialize)]
        struct SubJson {
            cells: Vec<CellJson>,
        }
        let parsed: SubJson = serde_json::from_value(v.clone())
            .map_err(|e| SubdivisionError::Parse(e.to_string()))?;
        let cells = parsed
            .cells
            .iter()
            .map(|c| {
                let vs: Vec<Point> = c.vertices.iter().map(|p| (p[0], p[1])).collect();
                let ms: Vec<Point> = c.marked.iter().map(|p| (p[0], p[1])).collect();
                MarkedCell::new(&vs, &ms)
            })
            .collect();
        Ok(Self::new(config.clone(), cells))
    }
}

/// The affine function `z = offset + slope·(x, y)` through three lifted
/// points, or `None` if they project to a line.
pub fn plane_through(pts: [(Point, &Rational); 3]) -> Option<(Rational, (Rational, Rational))> {
    let [(p1, h1), (p2, h2), (p3, h3)] = pts;
    let d = orient(p1, p2, p3);
    if d == 0 {
        return None;
    }
    let d = int(d);
    let dh2 = h2 - h1;
    let dh3 = h3 - h1;
    let beta = (&dh2 * int(p3.1 - p1.1) - &dh3 * int(p2.1 - p1.1)) / &d;
    let gamma = (&dh3 * int(p2.0 - p1.0) - &dh2 * int(p3.0 - p1.0)) / &d;
    let offset = h1 - &beta * int(p1.0) - &gamma * int(p1.1);
    Some((offset, (beta, gamma)))
}

/// Heights times their common denominator, if small enough for `i128`
/// orientation tests.
fn scaled_integer_heights(lifted: &[(Point, Rational)]) -> Option<Vec<(Point, i64)>> {
    let den = crate::exact::common_denominator(lifted.iter().map(|(_, h)| h));
    let limit = num_bigint::BigInt::from(1i64 << 40);
    lifted
        .iter()
        .map(|(p, h)| {
            let scaled = (h * Rational::from_integer(den.clone())).to_integer();
            if scaled.magnitude() >= limit.magnitude() {
                return None;
            }
            i64::try_from(scaled).ok().map(|v| (*p, v))
        })
        .collect()
}

fn lower_facets_integer(lifted: &[(Point, i64)]) -> Vec<MarkedCell> {
    let n = lifted.len();
    let mut seen: BTreeSet<Vec<Point>> = BTreeSet::new();
    let mut cells = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (a, ha) = lifted[i];
                let (b, hb) = lifted[j];
                let (c, hc) = lifted[k];
                let d = orient(a, b, c);
                if d == 0 {
                    continue;
                }
                let sign = d.signum() as i128;
                let r1 = [(b.0 - a.0) as i128, (b.1 - a.1) as i128, (hb - ha) as i128];
                let r2 = [(c.0 - a.0) as i128, (c.1 - a.1) as i128, (hc - ha) as i128];
                let n0 = r1[1] * r2[2] - r1[2] * r2[1];
                let n1 = r1[2] * r2[0] - r1[0] * r2[2];
                let n2 = r1[0] * r2[1] - r1[1] * r2[0];
                let mut on = Vec::new();
                let mut below = false;
                for &(p, h) in lifted {
                    let q = [(p.0 - a.0) as i128, (p.1 - a.1) as i128, (h - ha) as i128];
                    let side = sign * (n0 * q[0] + n1 * q[1] + n2 * q[2]);
                    if side < 0 {
                        below = true;
                        break;
                    }
                    if side == 0 {
                        on.push(p);
                    }
                }
                if below {
                    continue;
                }
                on.sort();
                if seen.insert(on.clone()) {
                    cells.push(MarkedCell::new(&on, &on));
                }
            }
        }
    }
    cells
}

fn lower_facets_rational(lifted: &[(Point, Rational)]) -> Vec<MarkedCell> {
    let n = lifted.len();
    let mut seen: BTreeSet<Vec<Point>> = BTreeSet::new();
    let mut cells = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let Some((offset, (beta, gamma))) = plane_through([
                    (lifted[i].0, &lifted[i].1),
                    (lifted[j].0, &lifted[j].1),
                    (lifted[k].0, &lifted[k].1),
                ]) else {
                    continue;
                };
                let mut on: Vec<Point> = Vec::new();
                let mut below = false;
                for (p, h) in lifted {
                    let z = &offset + &beta * int(p.0) + &gamma * int(p.1);
                    let diff = h - z;
                    if diff < Rational::zero() {
                        below = true;
                        break;
                    }
                    if diff.is_zero() {
                        on.push(*p);
                    }
                }
                if below {
                    continue;
                }
                on.sort();
                if seen.insert(on.clone()) {
                    cells.push(MarkedCell::new(&on, &on));
                }
            }
        }
    }
    cells
}

/// The regular marked subdivision induced by `u`.
///
/// Every lower facet of the lifted finite points is found as a plane through
/// three non-collinear lifted points with no lifted point below it. Points
/// at `+∞` are never marked.
pub fn regular_subdivision(
    config: &PointConfig,
    u: &HeightVector,
) -> Result<MarkedSubdivision, SubdivisionError> {
    for &v in config.hull() {
        if u.get(v)?.is_none() {
            return Err(SubdivisionError::InfiniteHullVertex(v));
        }
    }
    let mut lifted: Vec<(Point, Rational)> = Vec::new();
    for &p in config.points() {
        if let Some(h) = u.get(p)? {
            lifted.push((p, h.clone()));
        }
    }
    let cells = match scaled_integer_heights(&lifted) {
        Some(ints) => lower_facets_integer(&ints),
        None => lower_facets_rational(&lifted),
    };
    Ok(MarkedSubdivision::new(config.clone(), cells))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subdivision::config::CENTER;

    fn cell(vs: &[Point]) -> MarkedCell {
        MarkedCell::new(vs, vs)
    }

    #[test]
    fn coarsest_from_zero_heights() {
        let cfg = PointConfig::a3();
        let s = regular_subdivision(&cfg, &HeightVector::zero_a3()).unwrap();
        assert_eq!(s, MarkedSubdivision::coarsest(&cfg));
        assert!(!s.is_interior_vertex_visible(CENTER).unwrap());
        assert!(s.is_interior_vertex_visible((0, 0)).is_err());
    }

    #[test]
    fn worked_example_triangulation() {
        let cfg = PointConfig::a3();
        let u = HeightVector::from_a3_ints([0, 1, 100, 100, 1, 100, 1, 1, 3, 7]);
        let s = regular_subdivision(&cfg, &u).unwrap();
        let expected = MarkedSubdivision::new(
            cfg.clone(),
            vec![
                cell(&[(0, 0), (3, 0), (1, 1)]),
                cell(&[(3, 0), (1, 2), (1, 1)]),
                cell(&[(0, 0), (1, 1), (0, 1)]),
                cell(&[(0, 1), (1, 1), (1, 2)]),
                cell(&[(0, 1), (1, 2), (0, 2)]),
                cell(&[(0, 2), (1, 2), (0, 3)]),
            ],
        );
        assert_eq!(s, expected);
        for p in [(1, 0), (2, 0), (2, 1)] {
            assert!(!s.marked_points().contains(&p));
        }
        assert!(s.is_interior_vertex_visible(CENTER).unwrap());
        assert!(s.is_refinement_of(&MarkedSubdivision::coarsest(&cfg)).unwrap());
        assert!(s.is_refinement_of(&s).unwrap());
    }

    #[test]
    fn integer_and_rational_paths_agree() {
        let lifted: Vec<(Point, Rational)> = crate::subdivision::A3_ORDER
            .iter()
            .enumerate()
            .map(|(i, &p)| (p, Rational::new(((i * 7 % 5) as i64).into(), 3.into())))
            .collect();
        let ints = scaled_integer_heights(&lifted).unwrap();
        let mut a = lower_facets_integer(&ints);
        let mut b = lower_facets_rational(&lifted);
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn infinite_hull_vertex_rejected() {
        let cfg = PointConfig::a3();
        let mut u = HeightVector::zero_a3();
        u.set((3, 0), None);
        assert_eq!(
            regular_subdivision(&cfg, &u),
            Err(SubdivisionError::InfiniteHullVertex((3, 0)))
        );
    }
}
