//! Rays of the secondary fan of A3: lifts, folds and pinwheels.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::exact::{int, Rational};

use super::config::{PointConfig, A3_ORDER, CENTER};
use super::geometry::{cross, gcd, locate, orient, sub, Location, Point};
use super::heights::HeightVector;
use super::regular::{regular_subdivision, MarkedCell, MarkedSubdivision};
use super::SubdivisionError;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RayClass {
    /// Raises the non-vertex point.
    Lift(Point),
    /// Bends along the segment between two boundary points, stored sorted.
    Fold(Point, Point),
    /// Three cells meeting at (1,1); spokes counterclockwise starting from
    /// the smallest point.
    Pinwheel(Point, Point, Point),
    NotARay,
}

impl RayClass {
    pub fn fold(a: Point, b: Point) -> Self {
        RayClass::Fold(a.min(b), a.max(b))
    }

    /// Orders the spokes counterclockwise around (1,1).
    pub fn pinwheel(a: Point, b: Point, c: Point) -> Self {
        let mut spokes = [a, b, c];
        spokes.sort_by(|&p, &q| angle_cmp(sub(p, CENTER), sub(q, CENTER)));
        let start = (0..3).min_by_key(|&i| spokes[i]).expect("three spokes");
        spokes.rotate_left(start);
        RayClass::Pinwheel(spokes[0], spokes[1], spokes[2])
    }

    pub fn tag(&self) -> &'static str {
        match self {
            RayClass::Lift(_) => "lift",
            RayClass::Fold(..) => "fold",
            RayClass::Pinwheel(..) => "pinwheel",
            RayClass::NotARay => "not a ray",
        }
    }

    pub fn points(&self) -> Vec<Point> {
        match *self {
            RayClass::Lift(p) => vec![p],
            RayClass::Fold(a, b) => vec![a, b],
            RayClass::Pinwheel(a, b, c) => vec![a, b, c],
            RayClass::NotARay => vec![],
        }
    }
}

impl std::fmt::Display for RayClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let pts: Vec<String> = self
            .points()
            .iter()
            .map(|p| format!("({},{})", p.0, p.1))
            .collect();
        match self {
            RayClass::NotARay => write!(f, "not a ray"),
            _ => write!(f, "{} {}", self.tag(), pts.join("-")),
        }
    }
}

/// Polar order of nonzero lattice vectors, starting from the positive x-axis.
fn angle_cmp(v: Point, w: Point) -> std::cmp::Ordering {
    let half = |p: Point| if p.1 > 0 || (p.1 == 0 && p.0 > 0) { 0 } else { 1 };
    half(v)
        .cmp(&half(w))
        .then_with(|| 0.cmp(&cross(v, w)))
}

/// A coordinate permutation of `(x, y, z)`, acting on A3 through
/// `(i, j) ↦ (i, j, 3-i-j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct S3Element([usize; 3]);

impl S3Element {
    pub const IDENTITY: S3Element = S3Element([0, 1, 2]);
    pub const SWAP_XY: S3Element = S3Element([1, 0, 2]);

    /// All six permutations.
    pub fn all() -> [S3Element; 6] {
        [
            S3Element([0, 1, 2]),
            S3Element([0, 2, 1]),
            S3Element([1, 0, 2]),
            S3Element([1, 2, 0]),
            S3Element([2, 0, 1]),
            S3Element([2, 1, 0]),
        ]
    }

    /// Coordinate `k` of a point moves to position `self.0[k]`.
    pub fn apply_point(&self, p: Point) -> Point {
        let c = [p.0, p.1, 3 - p.0 - p.1];
        let mut out = [0i64; 3];
        for k in 0..3 {
            out[self.0[k]] = c[k];
        }
        (out[0], out[1])
    }

    pub fn apply_heights(&self, u: &HeightVector) -> HeightVector {
        let values: BTreeMap<Point, Option<Rational>> = u
            .iter()
            .map(|(p, v)| (self.apply_point(p), v.cloned()))
            .collect();
        HeightVector::new(values)
    }

    pub fn apply_subdivision(&self, s: &MarkedSubdivision) -> MarkedSubdivision {
        let cells = s
            .cells()
            .iter()
            .map(|c| {
                let vs: Vec<Point> = c.vertices().iter().map(|&p| self.apply_point(p)).collect();
                let ms: Vec<Point> = c.marked().iter().map(|&p| self.apply_point(p)).collect();
                MarkedCell::new(&vs, &ms)
            })
            .collect();
        MarkedSubdivision::new(s.config().clone(), cells)
    }

    pub fn apply_ray(&self, r: &RayClass) -> RayClass {
        match *r {
            RayClass::Lift(p) => RayClass::Lift(self.apply_point(p)),
            RayClass::Fold(a, b) => RayClass::fold(self.apply_point(a), self.apply_point(b)),
            RayClass::Pinwheel(a, b, c) => RayClass::pinwheel(
                self.apply_point(a),
                self.apply_point(b),
                self.apply_point(c),
            ),
            RayClass::NotARay => RayClass::NotARay,
        }
    }
}

/// Lattice points of the configuration inside (or on) a cell.
fn points_in_cell(config: &PointConfig, cell: &MarkedCell) -> Vec<Point> {
    let mut pts: Vec<Point> = config
        .points()
        .iter()
        .copied()
        .filter(|&p| cell.location(p) != Location::Outside)
        .collect();
    pts.sort();
    pts
}

/// Identifies lifts, folds and pinwheels of A3.
pub fn classify_ray(s: &MarkedSubdivision) -> RayClass {
    let config = s.config();
    if !config.is_a3() {
        return RayClass::NotARay;
    }
    let cells = s.cells();
    if cells.len() == 1 {
        let missing: Vec<Point> = config
            .points()
            .iter()
            .copied()
            .filter(|p| !cells[0].is_marked(*p))
            .collect();
        return match missing.as_slice() {
            [nu] if !config.is_hull_vertex(*nu) && cells[0].vertices() == config.hull() => {
                RayClass::Lift(*nu)
            }
            _ => RayClass::NotARay,
        };
    }
    let full_marking = cells
        .iter()
        .all(|c| c.marked() == points_in_cell(config, c).as_slice());
    if !full_marking {
        return RayClass::NotARay;
    }
    let shared = s.shared_edges();
    let on_boundary = |p: Point| config.location(p) == Location::Boundary;
    match cells.len() {
        2 if shared.len() == 1 => {
            let (a, b) = shared[0].endpoints;
            if on_boundary(a) && on_boundary(b) && !config.on_common_hull_edge(a, b) {
                RayClass::fold(a, b)
            } else {
                RayClass::NotARay
            }
        }
        3 if shared.len() == 3 => {
            if cells.iter().any(|c| !c.has_vertex(CENTER)) {
                return RayClass::NotARay;
            }
            let mut spokes = Vec::new();
            for e in &shared {
                let (a, b) = e.endpoints;
                let other = if a == CENTER {
                    b
                } else if b == CENTER {
                    a
                } else {
                    return RayClass::NotARay;
                };
                if !on_boundary(other) {
                    return RayClass::NotARay;
                }
                spokes.push(other);
            }
            let ray = RayClass::pinwheel(spokes[0], spokes[1], spokes[2]);
            let RayClass::Pinwheel(p1, p2, p3) = ray else {
                unreachable!()
            };
            if locate(&[p1, p2, p3], CENTER) == Location::Interior {
                ray
            } else {
                RayClass::NotARay
            }
        }
        _ => RayClass::NotARay,
    }
}

/// `max(ω·w - c, 0)` for the primitive normal `w` of the line `ab`.
pub fn fold_witness(a: Point, b: Point) -> HeightVector {
    let (mut w0, mut w1) = (b.1 - a.1, a.0 - b.0);
    let g = gcd(w0, w1);
    w0 /= g;
    w1 /= g;
    let c = w0 * a.0 + w1 * a.1;
    HeightVector::from_fn_a3(|p| int((p.0 * w0 + p.1 * w1 - c).max(0)))
}

/// `e_ν`.
pub fn lift_witness(nu: Point) -> HeightVector {
    HeightVector::from_fn_a3(|p| int((p == nu) as i64))
}

/// Zero on the cone spanned by the first two spokes and the coordinate
/// along the third spoke on the other two cones.
pub fn pinwheel_witness(p1: Point, p2: Point, p3: Point) -> HeightVector {
    let v = [sub(p1, CENTER), sub(p2, CENTER), sub(p3, CENTER)];
    // Coordinates of d in the basis (a, b), if both are nonnegative.
    let coords = |d: Point, a: Point, b: Point| -> Option<(Rational, Rational)> {
        let det = cross(a, b);
        let s = Rational::new(cross(d, b).into(), det.into());
        let t = Rational::new(cross(a, d).into(), det.into());
        (s >= Rational::zero() && t >= Rational::zero()).then_some((s, t))
    };
    HeightVector::from_fn_a3(|p| {
        let d = sub(p, CENTER);
        if d == (0, 0) || coords(d, v[0], v[1]).is_some() {
            return Rational::zero();
        }
        if let Some((_, t)) = coords(d, v[1], v[2]) {
            return t;
        }
        let (s, _) = coords(d, v[2], v[0]).expect("the three cones cover the plane");
        s
    })
}

/// Every lift, fold and pinwheel of A3 with its witness, before removing
/// symmetric copies.
pub fn enumerate_rays_all() -> Vec<(RayClass, HeightVector)> {
    let config = PointConfig::a3();
    let mut out = Vec::new();
    for &p in A3_ORDER.iter() {
        if !config.is_hull_vertex(p) {
            out.push((RayClass::Lift(p), lift_witness(p)));
        }
    }
    let boundary = config.boundary_points();
    for (i, &a) in boundary.iter().enumerate() {
        for &b in &boundary[i + 1..] {
            if !config.on_common_hull_edge(a, b) {
                out.push((RayClass::fold(a, b), fold_witness(a, b)));
            }
        }
    }
    for (i, &a) in boundary.iter().enumerate() {
        for (j, &b) in boundary.iter().enumerate().skip(i + 1) {
            for &c in &boundary[j + 1..] {
                let RayClass::Pinwheel(p1, p2, p3) = RayClass::pinwheel(a, b, c) else {
                    unreachable!()
                };
                if orient(p1, p2, p3) > 0 && locate(&[p1, p2, p3], CENTER) == Location::Interior {
                    out.push((RayClass::Pinwheel(p1, p2, p3), pinwheel_witness(p1, p2, p3)));
                }
            }
        }
    }
    out
}

/// Chosen representative of the S3-orbit of a ray.
///
/// Folds prefer a segment from the bottom edge to the left edge, taking the
/// bottom endpoint as far right and then the left endpoint as low as
/// possible; otherwise, and for other rays, the smallest orbit element.
pub fn orbit_representative(r: &RayClass) -> RayClass {
    let orbit: Vec<RayClass> = S3Element::all().iter().map(|g| g.apply_ray(r)).collect();
    if let RayClass::Fold(..) = r {
        let score = |x: &RayClass| -> Option<(i64, i64)> {
            let RayClass::Fold(a, b) = *x else { return None };
            [(a, b), (b, a)]
                .into_iter()
                .filter(|(bottom, left)| bottom.1 == 0 && left.0 == 0)
                .map(|(bottom, left)| (bottom.0, -left.1))
                .max()
        };
        if let Some(best) = orbit
            .iter()
            .filter_map(|x| score(x).map(|s| (s, x.clone())))
            .max_by(|(s1, x1), (s2, x2)| s1.cmp(s2).then_with(|| x2.cmp(x1)))
        {
            return best.1;
        }
    }
    orbit.into_iter().min().expect("nonempty orbit")
}

/// One ray per S3-orbit with its witness, sorted by class.
pub fn enumerate_rays(config: &PointConfig) -> Result<Vec<(RayClass, HeightVector)>, SubdivisionError> {
    if !config.is_a3() {
        return Err(SubdivisionError::UnsupportedConfig);
    }
    let mut reps: BTreeMap<RayClass, HeightVector> = BTreeMap::new();
    for (ray, _) in enumerate_rays_all() {
        let rep = orbit_representative(&ray);
        if !reps.contains_key(&rep) {
            let witness = match rep {
                RayClass::Lift(p) => lift_witness(p),
                RayClass::Fold(a, b) => fold_witness(a, b),
                RayClass::Pinwheel(a, b, c) => pinwheel_witness(a, b, c),
                RayClass::NotARay => unreachable!(),
            };
            reps.insert(rep, witness);
        }
    }
    Ok(reps.into_iter().collect())
}

/// Regular subdivision of a ray witness followed by classification.
pub fn classify_heights(u: &HeightVector) -> Result<RayClass, SubdivisionError> {
    Ok(classify_ray(&regular_subdivision(&PointConfig::a3(), u)?))
}
