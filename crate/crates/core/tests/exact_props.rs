use std::collections::BTreeSet;

use num_traits::Zero;
use proptest::prelude::*;
use tropj::exact::*;

fn xy() -> VariableSet {
    VariableSet::new(["x", "y"])
}

fn small_poly() -> impl Strategy<Value = SparsePolynomial<Rational>> {
    prop::collection::vec(((0i32..4, 0i32..4), -9i64..=9, 1i64..=4), 0..6).prop_map(|terms| {
        SparsePolynomial::from_terms(
            &xy(),
            terms
                .into_iter()
                .map(|((a, b), n, d)| (Exponent::new(vec![a, b]), ratio(n, d)))
                .collect::<Vec<_>>(),
        )
    })
}

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| ratio(n, d))
}

fn cofactor(m: &[Vec<i64>]) -> i64 {
    if m.len() == 1 {
        return m[0][0];
    }
    (0..m.len())
        .map(|c| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|(k, _)| *k != c).map(|(_, v)| *v).collect())
                .collect();
            let sign = if c % 2 == 0 { 1 } else { -1 };
            sign * m[0][c] * cofactor(&minor)
        })
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn product_support_lies_in_minkowski_sum(p in small_poly(), r in small_poly()) {
        let prod = p.mul(&r).unwrap();
        let sums: BTreeSet<Exponent> = p.support().iter()
            .flat_map(|a| r.support().into_iter().map(move |b| a.plus(&b)))
            .collect();
        prop_assert!(prod.support().iter().all(|e| sums.contains(e)));
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(p in small_poly(), r in small_poly(), x in rational(), y in rational()) {
        let at = |f: &SparsePolynomial<Rational>| f.eval(&[x.clone(), y.clone()]).unwrap();
        prop_assert_eq!(at(&p.add(&r).unwrap()), at(&p) + at(&r));
        prop_assert_eq!(at(&p.mul(&r).unwrap()), at(&p) * at(&r));
    }

    #[test]
    fn determinant_matches_cofactor_expansion(n in 1usize..=5, seed in prop::collection::vec(-9i64..=9, 25)) {
        let m: Vec<Vec<i64>> = (0..n).map(|i| seed[i * 5..i * 5 + n].to_vec()).collect();
        let qm: Vec<Vec<Rational>> = m.iter().map(|row| row.iter().map(|&v| int(v)).collect()).collect();
        prop_assert_eq!(det_fraction_free(&qm).unwrap(), int(cofactor(&m)));
    }
}

#[test]
fn generic_products_fill_the_minkowski_sum() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let mut random_poly = || {
            let terms: Vec<(Exponent, Rational)> = (0..4)
                .map(|_| {
                    let e = Exponent::new(vec![rng.gen_range(0..4), rng.gen_range(0..4)]);
                    (e, ratio(rng.gen_range(1..1000), rng.gen_range(1..1000)))
                })
                .collect();
            SparsePolynomial::from_terms(&xy(), terms)
        };
        let (p, r) = (random_poly(), random_poly());
        let sums: BTreeSet<Exponent> = p
            .support()
            .iter()
            .flat_map(|a| r.support().into_iter().map(move |b| a.plus(&b)))
            .collect();
        let prod: BTreeSet<Exponent> = p.mul(&r).unwrap().support().into_iter().collect();
        // Coefficients are sums of products of distinct random rationals; a
        // cancellation would need an exact coincidence.
        assert_eq!(prod, sums);
    }
}

#[test]
fn addition_examples() {
    let v = xy();
    let x = SparsePolynomial::<Rational>::var(&v, 0);
    let y = SparsePolynomial::<Rational>::var(&v, 1);
    assert_eq!(x.add(&y).unwrap().add(&x.neg()).unwrap(), y);
    let z = SparsePolynomial::zero(&v);
    assert_eq!(x.add(&z).unwrap(), x);
    let xy_ = x.mul(&y).unwrap();
    assert_eq!(xy_.add(&xy_).unwrap(), xy_.scale(&int(2)));
    assert_eq!(xy_.mul(&SparsePolynomial::one(&v)).unwrap(), xy_);
}

#[test]
fn evaluation_examples() {
    let v = xy();
    let x = SparsePolynomial::<Rational>::var(&v, 0);
    let y = SparsePolynomial::<Rational>::var(&v, 1);
    let p = x.pow(2).mul(&y).unwrap();
    assert_eq!(p.eval(&[int(2), int(3)]).unwrap(), int(12));
    let w = VariableSet::new(["a", "b"]);
    let a = SparsePolynomial::<Rational>::var(&w, 0);
    let b = SparsePolynomial::<Rational>::var(&w, 1);
    let b2 = a.pow(2).add(&b.scale(&int(4))).unwrap();
    let cube = b2.pow(3);
    assert_eq!(cube.num_terms(), 4);
    assert_eq!(cube.to_string(), "a^6 + 12*a^4*b + 48*a^2*b^2 + 64*b^3");
    let delta_w = cube.neg().sub(&SparsePolynomial::constant(&w, int(432))).unwrap();
    assert_eq!(delta_w.eval(&[int(0), int(0)]).unwrap(), int(-432));
}

#[test]
fn support_and_newton_vertices() {
    let v = xy();
    let p = SparsePolynomial::<Rational>::var(&v, 0)
        .add(&SparsePolynomial::var(&v, 1).pow(2).scale(&int(2)))
        .unwrap();
    let support: BTreeSet<Exponent> = p.support().into_iter().collect();
    let expected: BTreeSet<Exponent> =
        [Exponent::new(vec![1, 0]), Exponent::new(vec![0, 2])].into_iter().collect();
    assert_eq!(support, expected);

    let w = VariableSet::new(["a", "b"]);
    let a = SparsePolynomial::<Rational>::var(&w, 0);
    let b = SparsePolynomial::<Rational>::var(&w, 1);
    let numerator = a.pow(2).add(&b.scale(&int(4))).unwrap().pow(6);
    let verts = numerator.newton_vertices().unwrap();
    assert_eq!(verts, vec![Exponent::new(vec![0, 6]), Exponent::new(vec![12, 0])]);
}

#[test]
fn four_by_four_determinant_against_cofactors() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
    let m: Vec<Vec<i64>> = (0..4).map(|_| (0..4).map(|_| rng.gen_range(-50..=50)).collect()).collect();
    let qm: Vec<Vec<Rational>> = m.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect();
    assert_eq!(det_fraction_free(&qm).unwrap(), int(cofactor(&m)));
    assert!(!det_fraction_free(&qm).unwrap().is_zero() || cofactor(&m) == 0);
}
