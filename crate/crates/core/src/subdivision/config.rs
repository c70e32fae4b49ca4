//! Planar lattice point configurations.

use super::geometry::{convex_hull, locate, Location, Point};
use super::SubdivisionError;

/// The ten points of the cubic configuration in the order used for height
/// vectors, coefficient variables and serialization.
pub const A3_ORDER: [Point; 10] = [
    (1, 1),
    (3, 0),
    (2, 0),
    (1, 0),
    (0, 0),
    (2, 1),
    (0, 1),
    (1, 2),
    (0, 2),
    (0, 3),
];

pub const CENTER: Point = (1, 1);

/// Position of `p` in [`A3_ORDER`].
pub fn a3_index(p: Point) -> Option<usize> {
    A3_ORDER.iter().position(|&q| q == p)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfig {
    points: Vec<Point>,
    hull: Vec<Point>,
}

impl PointConfig {
    pub fn new(points: Vec<Point>) -> Result<Self, SubdivisionError> {
        let mut sorted = points.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != points.len() {
            return Err(SubdivisionError::Config("repeated point".into()));
        }
        let hull = convex_hull(&points);
        if hull.len() < 3 {
            return Err(SubdivisionError::Config("points are collinear".into()));
        }
        Ok(PointConfig { points, hull })
    }

    /// `{(i,j) : i,j ≥ 0, i+j ≤ 3}` in [`A3_ORDER`].
    pub fn a3() -> Self {
        PointConfig::new(A3_ORDER.to_vec()).expect("valid configuration")
    }

    pub fn is_a3(&self) -> bool {
        let mut a = self.points.clone();
        let mut b = A3_ORDER.to_vec();
        a.sort();
        b.sort();
        a == b
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Hull vertices, counterclockwise.
    pub fn hull(&self) -> &[Point] {
        &self.hull
    }

    pub fn contains(&self, p: Point) -> bool {
        self.points.contains(&p)
    }

    pub fn is_hull_vertex(&self, p: Point) -> bool {
        self.hull.contains(&p)
    }

    pub fn location(&self, p: Point) -> Location {
        locate(&self.hull, p)
    }

    pub fn boundary_points(&self) -> Vec<Point> {
        self.points
            .iter()
            .copied()
            .filter(|&p| self.location(p) == Location::Boundary)
            .collect()
    }

    /// Index of the hull edge containing `p`, for each edge it lies on.
    pub fn hull_edges_through(&self, p: Point) -> Vec<usize> {
        let n = self.hull.len();
        (0..n)
            .filter(|&i| super::geometry::on_segment(self.hull[i], self.hull[(i + 1) % n], p))
            .collect()
    }

    /// Whether the segment `ab` lies inside one hull edge.
    pub fn on_common_hull_edge(&self, a: Point, b: Point) -> bool {
        let ea = self.hull_edges_through(a);
        self.hull_edges_through(b).iter().any(|e| ea.contains(e))
    }
}
