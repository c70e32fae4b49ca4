#![allow(dead_code)]

use std::sync::Once;

use tropj::exact::{int, ratio, Rational};
use tropj::jinv::{self, CubicInvariants, CACHE_ENV};
use tropj::subdivision::HeightVector;

/// Points the invariants cache at the shared test directory, then loads it.
pub fn invariants() -> &'static CubicInvariants {
    static INIT: Once = Once::new();
    INIT.call_once(|| {
        let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("tropj-invariants.json");
        std::env::set_var(CACHE_ENV, path);
    });
    jinv::invariants().expect("invariants")
}

pub fn cache_path() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("tropj-invariants.json")
}

pub fn worked_example() -> HeightVector {
    HeightVector::from_a3_ints(jinv::WORKED_EXAMPLE_HEIGHTS)
}

/// `max(x - 1, 0)` scaled by `b`.
pub fn fold_x1(b: i64) -> HeightVector {
    HeightVector::from_fn_a3(|p| int(b * (p.0 - 1).max(0)))
}

pub fn q(n: i64, d: i64) -> Rational {
    ratio(n, d)
}
