//! Determinants over an arbitrary commutative ring.

use std::collections::HashMap;

use super::ring::Ring;
use super::ExactError;

/// Exact determinant by memoized expansion along rows.
///
/// Row `r` is expanded against every column subset of size `r` that the
/// rows above it have used, so each minor is computed once. Zero entries
/// are skipped, which keeps sparse matrices cheap. Supports up to 31
/// columns.
pub fn det_fraction_free<R: Ring>(matrix: &[Vec<R>]) -> Result<R, ExactError> {
    let n = matrix.len();
    for row in matrix {
        if row.len() != n {
            return Err(ExactError::NonSquare {
                rows: n,
                cols: row.len(),
            });
        }
    }
    if n == 0 || n > 31 {
        return Err(ExactError::NonSquare { rows: n, cols: n });
    }
    let one = matrix[0][0].one_like();
    let mut layer: HashMap<u32, R> = HashMap::new();
    layer.insert(0, one);
    for row in matrix {
        let mut next: HashMap<u32, R> = HashMap::new();
        for (&mask, minor) in &layer {
            for (c, entry) in row.iter().enumerate() {
                let bit = 1u32 << c;
                if mask & bit != 0 || entry.vanishes() {
                    continue;
                }
                let above = (mask >> c).count_ones();
                let mut term = minor.times(entry);
                if above % 2 == 1 {
                    term = term.negated();
                }
                let key = mask | bit;
                match next.get_mut(&key) {
                    Some(acc) => *acc = acc.plus(&term),
                    None => {
                        next.insert(key, term);
                    }
                }
            }
        }
        next.retain(|_, v| !v.vanishes());
        if next.is_empty() {
            return Ok(matrix[0][0].zero_like());
        }
        layer = next;
    }
    let full = (1u32 << n) - 1;
    Ok(layer
        .remove(&full)
        .unwrap_or_else(|| matrix[0][0].zero_like()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, Rational, SparsePolynomial, VariableSet};

    #[test]
    fn two_by_two_polynomial() {
        let vars = VariableSet::new(["x"]);
        let x = SparsePolynomial::<Rational>::var(&vars, 0);
        let one = SparsePolynomial::one(&vars);
        let m = vec![vec![x.clone(), one.clone()], vec![one, x]];
        assert_eq!(det_fraction_free(&m).unwrap().to_string(), "x^2 - 1");
    }

    #[test]
    fn identity_and_shape() {
        let id: Vec<Vec<Rational>> = (0..4)
            .map(|i| (0..4).map(|j| int((i == j) as i64)).collect())
            .collect();
        assert_eq!(det_fraction_free(&id).unwrap(), int(1));
        let bad = vec![vec![int(1), int(2)]];
        assert!(matches!(
            det_fraction_free(&bad),
            Err(ExactError::NonSquare { .. })
        ));
    }

    #[test]
    fn singular_matrix() {
        let m = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(det_fraction_free(&m).unwrap(), int(0));
    }
}
