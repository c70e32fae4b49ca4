//! Seeded random height vectors on A3.

use rand::Rng;

use crate::exact::{int, Rational};

use super::cone::membership_u;
use super::heights::HeightVector;

/// Integer heights in `[-20, 20]`, each perturbed by a random fraction with
/// denominator at most 8.
pub fn sample_heights<R: Rng>(rng: &mut R) -> HeightVector {
    let values: Vec<Rational> = (0..10)
        .map(|_| {
            let base = int(rng.gen_range(-20..=20));
            let den = rng.gen_range(1..=8i64);
            let num = rng.gen_range(0..den);
            base + Rational::new(num.into(), den.into())
        })
        .collect();
    HeightVector::from_a3_order(&values)
}

/// Rejection sampling of [`sample_heights`] on [`membership_u`].
pub fn sample_in_u<R: Rng>(rng: &mut R) -> HeightVector {
    loop {
        let u = sample_heights(rng);
        if membership_u(&u) {
            return u;
        }
    }
}
