//! SVG and ASCII drawings of tropical curves, computed without floating
//! point.

use std::fmt::Write;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::exact::{int, Rational};
use crate::subdivision::{lattice_steps, HeightVector};

use super::curve::{dual_curve, TropicalCurve};
use super::TropError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Svg,
    Ascii,
}

#[derive(Clone, Debug)]
pub struct RenderOptions {
    /// Square bounding box `[lo, hi]²` in curve coordinates.
    pub lo: Rational,
    pub hi: Rational,
    /// SVG side length in pixels.
    pub size: i64,
    /// ASCII grid width and height in characters.
    pub columns: i64,
    pub rows: i64,
    /// Draw the dual subdivision next to the curve.
    pub show_subdivision: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            lo: int(-6),
            hi: int(6),
            size: 480,
            columns: 61,
            rows: 31,
            show_subdivision: true,
        }
    }
}

pub fn render(u: &HeightVector, format: RenderFormat, opts: &RenderOptions) -> Result<String, TropError> {
    let curve = dual_curve(u)?;
    Ok(match format {
        RenderFormat::Svg => render_svg(&curve, opts),
        RenderFormat::Ascii => render_ascii(&curve, opts),
    })
}

/// Rounds to three decimals, half away from zero.
fn decimal(q: &Rational) -> String {
    let scaled = q * int(1000);
    let (n, d) = (scaled.numer().clone(), scaled.denom().clone());
    let (quot, rem) = n.abs().div_rem(&d);
    let mut m = quot;
    if rem * BigInt::from(2) >= d {
        m += 1;
    }
    let neg = n.is_negative() && !m.is_zero();
    let (whole, frac) = m.div_rem(&BigInt::from(1000));
    let mut s = format!("{}{}", if neg { "-" } else { "" }, whole);
    if !frac.is_zero() {
        let digits = format!("{:03}", frac);
        s.push('.');
        s.push_str(digits.trim_end_matches('0'));
    }
    s
}

type RPoint = (Rational, Rational);

/// Largest `t ≥ 0` keeping `p + t·d` inside the box, if any.
fn ray_exit(p: &RPoint, d: (i64, i64), lo: &Rational, hi: &Rational) -> Option<Rational> {
    let mut t: Option<Rational> = None;
    for (c, dc) in [(&p.0, d.0), (&p.1, d.1)] {
        if dc == 0 {
            continue;
        }
        let bound = if dc > 0 { hi } else { lo };
        let tc = (bound - c) / int(dc);
        t = Some(match t {
            Some(x) if x < tc => x,
            _ => tc,
        });
    }
    t.filter(|x| !x.is_negative())
}

struct Segment {
    a: RPoint,
    b: RPoint,
    weight: i64,
}

fn segments(curve: &TropicalCurve, opts: &RenderOptions) -> Vec<Segment> {
    let pos = |i: usize| (curve.vertices[i].x.clone(), curve.vertices[i].y.clone());
    let mut out = Vec::new();
    for e in &curve.edges {
        out.push(Segment {
            a: pos(e.from),
            b: pos(e.to),
            weight: lattice_steps(e.facet.0, e.facet.1),
        });
    }
    for r in &curve.rays {
        let a = pos(r.from);
        if let Some(t) = ray_exit(&a, r.direction, &opts.lo, &opts.hi) {
            let b = (&a.0 + &t * int(r.direction.0), &a.1 + &t * int(r.direction.1));
            out.push(Segment {
                a,
                b,
                weight: r.weight,
            });
        }
    }
    out
}

fn render_svg(curve: &TropicalCurve, opts: &RenderOptions) -> String {
    let size = opts.size;
    let scale = int(size) / (&opts.hi - &opts.lo);
    let sx = |x: &Rational| decimal(&((x - &opts.lo) * &scale));
    let sy = |y: &Rational| decimal(&((&opts.hi - y) * &scale));
    let width = if opts.show_subdivision { size * 3 / 2 + 20 } else { size };
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{size}" viewBox="0 0 {width} {size}">"#
    );
    let _ = writeln!(s, r#"<rect x="0" y="0" width="{width}" height="{size}" fill="white"/>"#);
    let _ = writeln!(s, r#"<g id="curve" stroke="black" stroke-linecap="round">"#);
    for seg in segments(curve, opts) {
        let _ = writeln!(
            s,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke-width="{}"/>"#,
            sx(&seg.a.0),
            sy(&seg.a.1),
            sx(&seg.b.0),
            sy(&seg.b.1),
            2 * seg.weight
        );
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r#"<g id="vertices" fill="black">"#);
    for v in &curve.vertices {
        let _ = writeln!(s, r#"<circle cx="{}" cy="{}" r="4"/>"#, sx(&v.x), sy(&v.y));
    }
    let _ = writeln!(s, "</g>");
    if opts.show_subdivision {
        let cell = size / 8;
        let x0 = size + 20;
        let y0 = size / 2 + cell * 3 / 2;
        let px = |p: (i64, i64)| (x0 + p.0 * cell, y0 - p.1 * cell);
        let _ = writeln!(s, r#"<g id="subdivision" stroke="gray" fill="none">"#);
        for c in curve.subdivision.cells() {
            let pts: Vec<String> = c
                .vertices()
                .iter()
                .map(|&p| {
                    let (x, y) = px(p);
                    format!("{x},{y}")
                })
                .collect();
            let _ = writeln!(s, r#"<polygon points="{}"/>"#, pts.join(" "));
        }
        for &p in curve.subdivision.config().points() {
            let (x, y) = px(p);
            let marked = curve.subdivision.marked_points().contains(&p);
            let fill = if marked { "black" } else { "white" };
            let _ = writeln!(s, r#"<circle cx="{x}" cy="{y}" r="3" fill="{fill}"/>"#);
        }
        let _ = writeln!(s, "</g>");
    }
    s.push_str("</svg>\n");
    s
}

/// Checks that the document is one `svg` element with balanced tags drawn
/// from the element set this renderer emits.
pub fn svg_is_well_formed(doc: &str) -> bool {
    const ALLOWED: [&str; 6] = ["svg", "g", "line", "circle", "polygon", "rect"];
    let mut stack: Vec<&str> = Vec::new();
    let mut rest = doc;
    let mut roots = 0;
    while let Some(open) = rest.find('<') {
        let Some(close) = rest[open..].find('>') else { return false };
        let tag = &rest[open + 1..open + close];
        rest = &rest[open + close + 1..];
        if let Some(name) = tag.strip_prefix('/') {
            if stack.pop() != Some(name.trim()) {
                return false;
            }
            continue;
        }
        let self_closing = tag.ends_with('/');
        let name = tag.split_whitespace().next().unwrap_or("").trim_end_matches('/');
        if !ALLOWED.contains(&name) {
            return false;
        }
        if stack.is_empty() {
            roots += 1;
            if name != "svg" {
                return false;
            }
        }
        if tag.matches('"').count() % 2 != 0 {
            return false;
        }
        if !self_closing {
            stack.push(name);
        }
    }
    stack.is_empty() && roots == 1 && rest.trim().is_empty()
}

fn render_ascii(curve: &TropicalCurve, opts: &RenderOptions) -> String {
    let (cols, rows) = (opts.columns, opts.rows);
    let span = &opts.hi - &opts.lo;
    let cell_of = |p: &RPoint| -> Option<(usize, usize)> {
        let fx = ((&p.0 - &opts.lo) / &span * int(cols - 1)).round().to_integer();
        let fy = ((&opts.hi - &p.1) / &span * int(rows - 1)).round().to_integer();
        let (cx, cy): (i64, i64) = (fx.try_into().ok()?, fy.try_into().ok()?);
        (0..cols).contains(&cx).then_some(())?;
        (0..rows).contains(&cy).then_some(())?;
        Some((cx as usize, cy as usize))
    };
    let mut grid = vec![vec![' '; cols as usize]; rows as usize];
    for seg in segments(curve, opts) {
        let dx = &seg.b.0 - &seg.a.0;
        let dy = &seg.b.1 - &seg.a.1;
        let glyph = if dy.is_zero() {
            '-'
        } else if dx.is_zero() {
            '|'
        } else if dx.is_positive() == dy.is_positive() {
            '/'
        } else {
            '\\'
        };
        let steps = 4 * cols.max(rows);
        for k in 0..=steps {
            let t = Rational::new(k.into(), steps.into());
            let p = (&seg.a.0 + &t * &dx, &seg.a.1 + &t * &dy);
            if let Some((x, y)) = cell_of(&p) {
                grid[y][x] = glyph;
            }
        }
    }
    for v in &curve.vertices {
        if let Some((x, y)) = cell_of(&(v.x.clone(), v.y.clone())) {
            grid[y][x] = 'o';
        }
    }
    let mut s = String::new();
    for row in grid {
        let line: String = row.into_iter().collect();
        let _ = writeln!(s, "{}", line.trim_end());
    }
    let _ = writeln!(s);
    for (i, v) in curve.vertices.iter().enumerate() {
        let _ = writeln!(s, "vertex {i}: ({}, {})", v.x, v.y);
    }
    for e in &curve.edges {
        let _ = writeln!(
            s,
            "edge {}-{}: lattice length {}",
            e.from,
            e.to,
            e.lattice_length()
        );
    }
    for r in &curve.rays {
        let _ = writeln!(
            s,
            "ray from {} direction ({}, {}) weight {}",
            r.from, r.direction.0, r.direction.1, r.weight
        );
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn decimals() {
        assert_eq!(decimal(&ratio(1, 3)), "0.333");
        assert_eq!(decimal(&ratio(-5, 2)), "-2.5");
        assert_eq!(decimal(&ratio(2, 3)), "0.667");
        assert_eq!(decimal(&int(40)), "40");
        assert_eq!(decimal(&ratio(-1, 10000)), "0");
    }

    #[test]
    fn svg_checker() {
        assert!(svg_is_well_formed("<svg a=\"1\"><g><line/></g></svg>\n"));
        assert!(!svg_is_well_formed("<svg><g></svg>"));
        assert!(!svg_is_well_formed("<svg><script/></svg>"));
    }
}
