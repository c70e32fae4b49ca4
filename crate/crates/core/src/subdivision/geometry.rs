//! Exact planar lattice geometry.

pub type Point = (i64, i64);

/// `(b - a) × (c - a)`; positive for a counterclockwise turn.
pub fn orient(a: Point, b: Point, c: Point) -> i64 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

/// `det(v, w)` for difference vectors.
pub fn cross(v: Point, w: Point) -> i64 {
    v.0 * w.1 - v.1 * w.0
}

pub fn sub(a: Point, b: Point) -> Point {
    (a.0 - b.0, a.1 - b.1)
}

/// Strict vertices of the convex hull, counterclockwise, starting from the
/// lexicographically smallest point. Degenerate inputs give the extreme
/// points of a segment, or the single point.
pub fn convex_hull(points: &[Point]) -> Vec<Point> {
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<Point> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && orient(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Point> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && orient(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Twice the signed area of a polygon given in order.
pub fn twice_area(poly: &[Point]) -> i64 {
    let n = poly.len();
    (0..n).map(|i| cross(poly[i], poly[(i + 1) % n])).sum()
}

/// Where `p` sits relative to a convex counterclockwise polygon.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Interior,
    Boundary,
    Outside,
}

pub fn locate(poly: &[Point], p: Point) -> Location {
    let n = poly.len();
    let mut on_edge = false;
    for i in 0..n {
        let a = poly[i];
        let b = poly[(i + 1) % n];
        let o = orient(a, b, p);
        if o < 0 {
            return Location::Outside;
        }
        if o == 0 {
            let within = p.0 >= a.0.min(b.0)
                && p.0 <= a.0.max(b.0)
                && p.1 >= a.1.min(b.1)
                && p.1 <= a.1.max(b.1);
            if !within {
                return Location::Outside;
            }
            on_edge = true;
        }
    }
    if on_edge {
        Location::Boundary
    } else {
        Location::Interior
    }
}

/// Whether `p` lies on the closed segment `ab`.
pub fn on_segment(a: Point, b: Point, p: Point) -> bool {
    orient(a, b, p) == 0
        && p.0 >= a.0.min(b.0)
        && p.0 <= a.0.max(b.0)
        && p.1 >= a.1.min(b.1)
        && p.1 <= a.1.max(b.1)
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Number of lattice steps along the segment `ab`.
pub fn lattice_steps(a: Point, b: Point) -> i64 {
    gcd(b.0 - a.0, b.1 - a.1)
}
