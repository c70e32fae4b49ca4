//! Curve vertices, bounded edges and rays.

use num_traits::Signed;

use crate::exact::{format_rational, int, Rational};
use crate::subdivision::{
    lattice_steps, plane_through, regular_subdivision, HeightVector, MarkedSubdivision, Point,
    PointConfig,
};

use super::TropError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveVertex {
    pub x: Rational,
    pub y: Rational,
    /// Index of the dual cell.
    pub cell: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveEdge {
    pub from: usize,
    pub to: usize,
    /// Dual facet `((x1, y1), (x2, y2))`.
    pub facet: (Point, Point),
    /// `(y2 - y1, x1 - x2)`.
    pub direction: (i64, i64),
    /// `λ` with `to - from = λ·direction`.
    pub lambda: Rational,
}

impl CurveEdge {
    /// Euclidean length over the length of `direction`.
    pub fn lattice_length(&self) -> Rational {
        self.lambda.abs()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveRay {
    pub from: usize,
    /// Primitive direction.
    pub direction: (i64, i64),
    /// Lattice length of the dual boundary facet.
    pub weight: i64,
    pub facet: (Point, Point),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalCurve {
    pub subdivision: MarkedSubdivision,
    pub vertices: Vec<CurveVertex>,
    pub edges: Vec<CurveEdge>,
    pub rays: Vec<CurveRay>,
}

/// `(y2 - y1, x1 - x2)` for the facet from `a` to `b`.
pub(crate) fn facet_normal(a: Point, b: Point) -> (i64, i64) {
    (b.1 - a.1, a.0 - b.0)
}

/// Solves `(qx, qy) = λ·(dx, dy)` for parallel vectors.
pub(crate) fn parallel_ratio(q: (&Rational, &Rational), d: (i64, i64)) -> Rational {
    if d.0 != 0 {
        q.0 / int(d.0)
    } else {
        q.1 / int(d.1)
    }
}

/// The point where all terms of the cell tie for the minimum of
/// `min(u_ij + i·x + j·y)`.
fn cell_vertex(
    s: &MarkedSubdivision,
    u: &HeightVector,
    cell: usize,
) -> Result<(Rational, Rational), TropError> {
    let vs = s.cells()[cell].vertices();
    let n = vs.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let h = |p: Point| u.at(p).cloned().expect("cell vertices have finite heights");
                let (hi, hj, hk) = (h(vs[i]), h(vs[j]), h(vs[k]));
                if let Some((_, (beta, gamma))) =
                    plane_through([(vs[i], &hi), (vs[j], &hj), (vs[k], &hk)])
                {
                    return Ok((-beta, -gamma));
                }
            }
        }
    }
    Err(TropError::DegenerateCell(cell))
}

/// Inward normal of the hull edge `a -> b` of a counterclockwise polygon,
/// made primitive.
fn inward_primitive(a: Point, b: Point) -> (i64, i64) {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let g = crate::subdivision::gcd(dx, dy);
    (-dy / g, dx / g)
}

/// The tropical curve of `u` on A3, min convention.
pub fn dual_curve(u: &HeightVector) -> Result<TropicalCurve, TropError> {
    dual_curve_on(&PointConfig::a3(), u)
}

pub fn dual_curve_on(config: &PointConfig, u: &HeightVector) -> Result<TropicalCurve, TropError> {
    let s = regular_subdivision(config, u)?;
    let mut vertices = Vec::with_capacity(s.cells().len());
    for i in 0..s.cells().len() {
        let (x, y) = cell_vertex(&s, u, i)?;
        vertices.push(CurveVertex { x, y, cell: i });
    }
    let mut edges = Vec::new();
    for e in s.shared_edges() {
        let (ci, cj) = e.cells;
        let (a, b) = e.endpoints;
        let direction = facet_normal(a, b);
        let dx = &vertices[cj].x - &vertices[ci].x;
        let dy = &vertices[cj].y - &vertices[ci].y;
        let lambda = parallel_ratio((&dx, &dy), direction);
        edges.push(CurveEdge {
            from: ci,
            to: cj,
            facet: (a, b),
            direction,
            lambda,
        });
    }
    let mut rays = Vec::new();
    for (ci, a, b) in s.boundary_edges() {
        rays.push(CurveRay {
            from: ci,
            direction: inward_primitive(a, b),
            weight: lattice_steps(a, b),
            facet: (a, b),
        });
    }
    Ok(TropicalCurve {
        subdivision: s,
        vertices,
        edges,
        rays,
    })
}

impl TropicalCurve {
    pub fn total_ray_weight(&self) -> i64 {
        self.rays.iter().map(|r| r.weight).sum()
    }

    /// `{"vertices":[...], "edges":[...], "rays":[...]}` with rationals as
    /// `"p/q"` strings.
    pub fn to_json(&self) -> serde_json::Value {
        let pt = |p: Point| serde_json::json!([p.0, p.1]);
        let vertices: Vec<_> = self
            .vertices
            .iter()
            .map(|v| {
                serde_json::json!({
                    "x": format_rational(&v.x),
                    "y": format_rational(&v.y),
                    "cell": self.subdivision.cells()[v.cell].vertices().iter().map(|&p| pt(p)).collect::<Vec<_>>(),
                })
            })
            .collect();
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|e| {
                serde_json::json!({
                    "from": e.from,
                    "to": e.to,
                    "facet": [pt(e.facet.0), pt(e.facet.1)],
                    "direction": [e.direction.0, e.direction.1],
                    "lattice_length": format_rational(&e.lattice_length()),
                })
            })
            .collect();
        let rays: Vec<_> = self
            .rays
            .iter()
            .map(|r| {
                serde_json::json!({
                    "from": r.from,
                    "direction": [r.direction.0, r.direction.1],
                    "weight": r.weight,
                    "facet": [pt(r.facet.0), pt(r.facet.1)],
                })
            })
            .collect();
        serde_json::json!({"vertices": vertices, "edges": edges, "rays": rays})
    }
}
