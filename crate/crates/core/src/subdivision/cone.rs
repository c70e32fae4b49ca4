//! The cone of heights whose subdivision shows (1,1) as a vertex.

use crate::exact::{int, Rational};

use super::geometry::Point;
use super::heights::HeightVector;

/// One strict inequality `Σ coef·u_p > rhs·u_11`.
struct Inequality {
    lhs: &'static [(i64, Point)],
    rhs: i64,
}

const fn ineq(lhs: &'static [(i64, Point)], rhs: i64) -> Inequality {
    Inequality { lhs, rhs }
}

const INEQUALITIES: [Inequality; 24] = [
    ineq(&[(3, (0, 1)), (2, (3, 0)), (1, (0, 3))], 6),
    ineq(&[(3, (1, 0)), (2, (0, 3)), (1, (3, 0))], 6),
    ineq(&[(3, (1, 2)), (1, (3, 0)), (2, (0, 0))], 6),
    ineq(&[(3, (2, 1)), (1, (0, 3)), (2, (0, 0))], 6),
    ineq(&[(2, (3, 0)), (3, (0, 2)), (1, (0, 0))], 6),
    ineq(&[(2, (0, 3)), (3, (2, 0)), (1, (0, 0))], 6),
    ineq(&[(1, (1, 2)), (1, (3, 0)), (1, (0, 0)), (1, (0, 2))], 4),
    ineq(&[(1, (2, 1)), (1, (0, 3)), (1, (0, 0)), (1, (2, 0))], 4),
    ineq(&[(1, (0, 1)), (1, (1, 0)), (1, (0, 3)), (1, (3, 0))], 4),
    ineq(&[(2, (0, 1)), (1, (1, 2)), (1, (3, 0))], 4),
    ineq(&[(2, (1, 0)), (1, (2, 1)), (1, (0, 3))], 4),
    ineq(&[(2, (1, 2)), (1, (2, 0)), (1, (0, 0))], 4),
    ineq(&[(2, (2, 1)), (1, (0, 2)), (1, (0, 0))], 4),
    ineq(&[(2, (0, 2)), (1, (1, 0)), (1, (3, 0))], 4),
    ineq(&[(2, (2, 0)), (1, (0, 1)), (1, (0, 3))], 4),
    ineq(&[(1, (2, 0)), (1, (0, 1)), (1, (1, 2))], 3),
    ineq(&[(1, (0, 2)), (1, (1, 0)), (1, (2, 1))], 3),
    ineq(&[(1, (3, 0)), (1, (0, 2)), (1, (0, 1))], 3),
    ineq(&[(1, (0, 3)), (1, (1, 0)), (1, (2, 0))], 3),
    ineq(&[(1, (0, 0)), (1, (1, 2)), (1, (2, 1))], 3),
    ineq(&[(1, (0, 0)), (1, (3, 0)), (1, (0, 3))], 3),
    ineq(&[(1, (2, 1)), (1, (0, 1))], 2),
    ineq(&[(1, (1, 0)), (1, (1, 2))], 2),
    ineq(&[(1, (2, 0)), (1, (0, 2))], 2),
];

/// Number of inequalities cutting out the cone.
pub const U_INEQUALITY_COUNT: usize = INEQUALITIES.len();

/// Whether all defining strict inequalities hold at `u`.
///
/// A `+∞` height on the left makes an inequality hold; `u_11 = +∞` or a
/// missing height makes the answer false.
pub fn membership_u(u: &HeightVector) -> bool {
    let Some(center) = u.at((1, 1)) else {
        return false;
    };
    INEQUALITIES.iter().all(|q| {
        let mut lhs = Rational::from_integer(0.into());
        for &(c, p) in q.lhs {
            match u.get(p) {
                Ok(Some(v)) => lhs += int(c) * v,
                Ok(None) => return true,
                Err(_) => return false,
            }
        }
        lhs > int(q.rhs) * center
    })
}
