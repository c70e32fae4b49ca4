//! The invariants `S`, `A = c·S³` and the discriminant `Δ` of the ternary
//! cubic `F = Σ a_ij x^i y^j z^(3-i-j)`.

use std::collections::HashMap;

use num_traits::Zero;

use crate::exact::{
    det_fraction_free, int, ratio, Exponent, Rational, SparsePolynomial, VariableSet,
};
use crate::subdivision::{a3_index, A3_ORDER};

use super::JinvError;

pub type Poly = SparsePolynomial<Rational>;

/// `a11, a30, a20, ...` following [`A3_ORDER`].
pub fn cubic_vars() -> VariableSet {
    use std::sync::OnceLock;
    static VARS: OnceLock<VariableSet> = OnceLock::new();
    VARS.get_or_init(|| VariableSet::new(A3_ORDER.iter().map(|p| format!("a{}{}", p.0, p.1))))
        .clone()
}

/// Variables `a, b` of the Weierstrass family.
pub fn weierstrass_vars() -> VariableSet {
    use std::sync::OnceLock;
    static VARS: OnceLock<VariableSet> = OnceLock::new();
    VARS.get_or_init(|| VariableSet::new(["a", "b"])).clone()
}

fn coefficient_var(i: usize, j: usize) -> usize {
    a3_index((i as i64, j as i64)).expect("point of A3")
}

/// The coefficient `a_ij` as a polynomial.
pub fn coefficient_poly(i: usize, j: usize) -> Poly {
    Poly::var(&cubic_vars(), coefficient_var(i, j))
}

/// Symmetric tensor `T[i][j][k]` with `F = Σ T_ijk x_i x_j x_k`: the
/// coefficient of the monomial with index counts `e` times `e0!e1!e2!/6`.
fn tensor_entry(idx: [usize; 3]) -> (usize, Rational) {
    let mut e = [0usize; 3];
    for &t in &idx {
        e[t] += 1;
    }
    let fact = |n: usize| (1..=n as i64).product::<i64>();
    let weight = ratio(fact(e[0]) * fact(e[1]) * fact(e[2]), 6);
    (coefficient_var(e[0], e[1]), weight)
}

fn levi_civita(p: [usize; 3]) -> i64 {
    match p {
        [0, 1, 2] | [1, 2, 0] | [2, 0, 1] => 1,
        [0, 2, 1] | [2, 1, 0] | [1, 0, 2] => -1,
        _ => 0,
    }
}

fn permutations3() -> Vec<[usize; 3]> {
    vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]]
}

/// The degree-4 invariant before normalization:
/// `Σ ε(i1,j1,k1) ε(i2,j2,l1) ε(i3,k2,l2) ε(j3,k3,l3) T[i1,i2,i3] T[j1,j2,j3] T[k1,k2,k3] T[l1,l2,l3]`.
pub fn aronhold_contraction() -> Poly {
    let vars = cubic_vars();
    let perms = permutations3();
    let mut acc: HashMap<Exponent, Rational> = HashMap::new();
    for &[i1, j1, k1] in &perms {
        for &[i2, j2, l1] in &perms {
            for &[i3, k2, l2] in &perms {
                for &[j3, k3, l3] in &perms {
                    let sign = levi_civita([i1, j1, k1])
                        * levi_civita([i2, j2, l1])
                        * levi_civita([i3, k2, l2])
                        * levi_civita([j3, k3, l3]);
                    let factors = [
                        tensor_entry([i1, i2, i3]),
                        tensor_entry([j1, j2, j3]),
                        tensor_entry([k1, k2, k3]),
                        tensor_entry([l1, l2, l3]),
                    ];
                    let mut e = vec![0; vars.len()];
                    let mut c = int(sign);
                    for (v, w) in factors {
                        e[v] += 1;
                        c *= w;
                    }
                    *acc.entry(Exponent::new(e)).or_insert_with(Rational::zero) += c;
                }
            }
        }
    }
    Poly::from_terms(&vars, acc)
}

/// Rows of the degree-4 Macaulay matrix of `∂F/∂x, ∂F/∂y, ∂F/∂z`.
///
/// Columns are the 15 quartic monomials in `x, y, z`, sorted descending.
/// The row of a monomial `m` is `(m / x_v²)·∂F/∂x_v` for the first variable
/// `x_v` with exponent at least 2 in `m`. Returns the matrix and the rows
/// whose monomial is divisible by two distinct squares.
pub fn macaulay_matrix() -> (Vec<Vec<Poly>>, Vec<usize>) {
    let vars = cubic_vars();
    let mut monomials: Vec<[usize; 3]> = Vec::new();
    for a in 0..=4 {
        for b in 0..=4 - a {
            monomials.push([a, b, 4 - a - b]);
        }
    }
    monomials.sort_by(|x, y| y.cmp(x));
    let column = |m: [usize; 3]| monomials.iter().position(|&c| c == m).expect("quartic");
    let zero = Poly::zero(&vars);
    let mut matrix = Vec::with_capacity(15);
    let mut extraneous = Vec::new();
    for (r, &m) in monomials.iter().enumerate() {
        let v = (0..3).find(|&v| m[v] >= 2).expect("some exponent is at least 2");
        if (0..3).filter(|&w| m[w] >= 2).count() >= 2 {
            extraneous.push(r);
        }
        let mut q = m;
        q[v] -= 2;
        let mut row = vec![zero.clone(); 15];
        for &(i, j) in A3_ORDER.iter() {
            let e = [i as usize, j as usize, (3 - i - j) as usize];
            if e[v] == 0 {
                continue;
            }
            let mut d = e;
            d[v] -= 1;
            let target = [q[0] + d[0], q[1] + d[1], q[2] + d[2]];
            row[column(target)] = coefficient_poly(e[0], e[1]).scale(&int(e[v] as i64));
        }
        matrix.push(row);
    }
    (matrix, extraneous)
}

/// Macaulay determinant divided by the extraneous minor; equal to the
/// discriminant up to a rational constant.
pub fn unnormalized_discriminant() -> Result<Poly, JinvError> {
    let (matrix, extraneous) = macaulay_matrix();
    let det = det_fraction_free(&matrix)?;
    // The minor uses the same rows and the columns of their monomials.
    let cols: Vec<usize> = extraneous.clone();
    let minor: Vec<Vec<Poly>> = extraneous
        .iter()
        .map(|&r| cols.iter().map(|&c| matrix[r][c].clone()).collect())
        .collect();
    let minor_det = det_fraction_free(&minor)?;
    if minor_det.is_zero() {
        return Err(JinvError::Construction("extraneous minor vanishes".into()));
    }
    Ok(det.div_exact(&minor_det)?)
}

/// Values of the cubic coefficients on `y² + a·xy - x³ - b·x² - 1`.
pub fn weierstrass_assignment() -> Vec<SparsePolynomial<Rational>> {
    let wv = weierstrass_vars();
    let a = Poly::var(&wv, 0);
    let b = Poly::var(&wv, 1);
    let c = |k: i64| Poly::constant(&wv, int(k));
    A3_ORDER
        .iter()
        .map(|&p| match p {
            (0, 2) => c(1),
            (1, 1) => a.clone(),
            (3, 0) => c(-1),
            (2, 0) => b.neg(),
            (0, 0) => c(-1),
            _ => Poly::zero(&wv),
        })
        .collect()
}

pub fn specialize_weierstrass(p: &Poly) -> Result<Poly, JinvError> {
    Ok(p.eval(&weierstrass_assignment())?)
}

/// `a² + 4b`.
pub fn weierstrass_b2() -> Poly {
    let wv = weierstrass_vars();
    let a = Poly::var(&wv, 0);
    let b = Poly::var(&wv, 1);
    a.pow(2).add(&b.scale(&int(4))).expect("same variables")
}

/// `-(a²+4b)³ - 432`.
pub fn weierstrass_delta_target() -> Poly {
    let wv = weierstrass_vars();
    weierstrass_b2()
        .pow(3)
        .neg()
        .sub(&Poly::constant(&wv, int(432)))
        .expect("same variables")
}

/// `(a²+4b)⁶`.
pub fn weierstrass_a_target() -> Poly {
    weierstrass_b2().pow(6)
}

/// The rational `κ` with `p = κ·target`, if any.
pub fn proportionality(p: &Poly, target: &Poly) -> Option<Rational> {
    let (e, c) = target.leading_term()?;
    let k = p.coefficient(e)? / c;
    (target.scale(&k) == *p && !k.is_zero()).then_some(k)
}

/// Outcome of specializing the invariants to the Weierstrass family.
#[derive(Clone, Debug, PartialEq)]
pub struct WeierstrassCertificate {
    pub delta: Poly,
    pub a: Poly,
    pub s: Poly,
}

impl WeierstrassCertificate {
    pub fn holds(&self) -> bool {
        self.delta == weierstrass_delta_target()
            && self.a == weierstrass_a_target()
            && self.s == weierstrass_b2().pow(2)
    }
}

#[derive(Clone, Debug)]
pub struct CubicInvariants {
    pub s: Poly,
    pub a: Poly,
    pub delta: Poly,
    pub certificate: WeierstrassCertificate,
}

impl CubicInvariants {
    /// Builds `S`, `A` and `Δ` from scratch and normalizes them on the
    /// Weierstrass family.
    pub fn build() -> Result<Self, JinvError> {
        let raw_s = aronhold_contraction();
        let s_w = specialize_weierstrass(&raw_s)?;
        let ks = proportionality(&s_w, &weierstrass_b2().pow(2))
            .ok_or_else(|| JinvError::Normalization("S".into()))?;
        let s = raw_s.scale(&ks.recip());
        let cube = s.pow(3);
        let cube_w = specialize_weierstrass(&cube)?;
        let ka = proportionality(&cube_w, &weierstrass_a_target())
            .ok_or_else(|| JinvError::Normalization("A".into()))?;
        let a = cube.scale(&ka.recip());
        let raw_delta = unnormalized_discriminant()?;
        let delta_w = specialize_weierstrass(&raw_delta)?;
        let kd = proportionality(&delta_w, &weierstrass_delta_target())
            .ok_or_else(|| JinvError::Normalization("Delta".into()))?;
        let delta = raw_delta.scale(&kd.recip());
        Self::from_parts(s, a, delta)
    }

    /// Wraps given polynomials after re-checking the certificate.
    pub fn from_parts(s: Poly, a: Poly, delta: Poly) -> Result<Self, JinvError> {
        let certificate = WeierstrassCertificate {
            delta: specialize_weierstrass(&delta)?,
            a: specialize_weierstrass(&a)?,
            s: specialize_weierstrass(&s)?,
        };
        if !certificate.holds() {
            return Err(JinvError::Normalization("Weierstrass certificate".into()));
        }
        Ok(CubicInvariants {
            s,
            a,
            delta,
            certificate,
        })
    }

    /// The scalar `c` in `A = c·S³`.
    pub fn a_over_s_cubed(&self) -> Option<Rational> {
        proportionality(&self.a, &self.s.pow(3))
    }
}

/// `Σ_p exponent(p)·(1, i, j)` must be `(d, d, d)` up to the total degree.
pub fn is_isobaric(p: &Poly, degree: i64) -> bool {
    p.terms().all(|(e, _)| {
        let mut sums = [0i64; 3];
        for (k, &(i, j)) in A3_ORDER.iter().enumerate() {
            let m = e.get(k) as i64;
            sums[0] += m;
            sums[1] += m * i;
            sums[2] += m * j;
        }
        sums == [degree, degree, degree]
    })
}

/// The monomial `a_11^12`.
pub fn twelve_e11() -> Exponent {
    let mut e = vec![0; 10];
    e[coefficient_var(1, 1)] = 12;
    Exponent::new(e)
}
