//! Exact convex-hull membership by phase-one simplex.

use num_traits::{One, Signed, Zero};

use super::rational::Rational;

/// Whether `target` is a convex combination of `generators`.
///
/// Solves `Σ λ_i g_i = target, Σ λ_i = 1, λ ≥ 0` for feasibility with the
/// simplex method under Bland's rule, in exact arithmetic.
pub fn in_convex_hull(target: &[Rational], generators: &[Vec<Rational>]) -> bool {
    if generators.is_empty() {
        return false;
    }
    let d = target.len();
    let n = generators.len();
    let m = d + 1;
    // Tableau rows: [λ_1..λ_n | rhs]; artificial columns are implicit since
    // they never re-enter once they leave the basis.
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for k in 0..d {
        let mut row: Vec<Rational> = generators.iter().map(|g| g[k].clone()).collect();
        row.push(target[k].clone());
        rows.push(row);
    }
    let mut last = vec![Rational::one(); n];
    last.push(Rational::one());
    rows.push(last);
    for row in rows.iter_mut() {
        if row[n].is_negative() {
            for v in row.iter_mut() {
                *v = -v.clone();
            }
        }
    }
    // basis[r] = Some(column) or None while the artificial of row r is basic.
    let mut basis: Vec<Option<usize>> = vec![None; m];
    // Reduced costs of the phase-one objective Σ artificials.
    let mut cost: Vec<Rational> = vec![Rational::zero(); n + 1];
    for row in &rows {
        for (j, v) in row.iter().enumerate() {
            cost[j] -= v;
        }
    }
    loop {
        let entering = (0..n).find(|&j| cost[j].is_negative());
        let Some(j) = entering else { break };
        let mut leave: Option<(usize, Rational)> = None;
        for (r, row) in rows.iter().enumerate() {
            if row[j].is_positive() {
                let ratio = &row[n] / &row[j];
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => {
                        ratio < *best
                            || (ratio == *best && basis_key(basis[r], r, n) < basis_key(basis[*lr], *lr, n))
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let Some((r, _)) = leave else {
            // Unbounded direction cannot occur for a bounded-below objective.
            break;
        };
        pivot(&mut rows, &mut cost, r, j);
        basis[r] = Some(j);
    }
    cost[n].is_zero()
}

fn basis_key(b: Option<usize>, row: usize, n: usize) -> usize {
    b.unwrap_or(n + row)
}

fn pivot(rows: &mut [Vec<Rational>], cost: &mut [Rational], r: usize, j: usize) {
    let p = rows[r][j].clone();
    if !p.is_one() {
        for v in rows[r].iter_mut() {
            *v /= &p;
        }
    }
    let pivot_row = rows[r].clone();
    for (i, row) in rows.iter_mut().enumerate() {
        if i == r || row[j].is_zero() {
            continue;
        }
        let f = row[j].clone();
        for (v, pv) in row.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *v -= &f * pv;
            }
        }
    }
    if !cost[j].is_zero() {
        let f = cost[j].clone();
        for (v, pv) in cost.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *v -= &f * pv;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};

    fn pt(x: i64, y: i64) -> Vec<Rational> {
        vec![int(x), int(y)]
    }

    #[test]
    fn triangle_membership() {
        let tri = vec![pt(0, 0), pt(3, 0), pt(0, 3)];
        assert!(in_convex_hull(&pt(1, 1), &tri));
        assert!(in_convex_hull(&pt(3, 0), &tri));
        assert!(in_convex_hull(&[ratio(3, 2), ratio(3, 2)], &tri));
        assert!(!in_convex_hull(&pt(2, 2), &tri));
        assert!(!in_convex_hull(&pt(-1, 0), &tri));
    }

    #[test]
    fn degenerate_generators() {
        let seg = vec![pt(0, 0), pt(2, 2), pt(1, 1)];
        assert!(in_convex_hull(&pt(1, 1), &seg));
        assert!(!in_convex_hull(&pt(1, 0), &seg));
        assert!(!in_convex_hull(&pt(1, 0), &[]));
    }
}
