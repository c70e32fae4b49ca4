//! Acceptance run: one PASS/FAIL line per criterion, exact arithmetic only.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::time::{Duration, Instant};

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tropj::exact::*;
use tropj::jinv::*;
use tropj::puiseux::*;
use tropj::subdivision::*;
use tropj::tropcurve::*;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, format!("{what} took {took:?}, limit {limit:?}"))
}

fn inv() -> &'static CubicInvariants {
    invariants().expect("invariants")
}

fn worked() -> HeightVector {
    HeightVector::from_a3_ints(WORKED_EXAMPLE_HEIGHTS)
}

fn weierstrass_certificates() -> Outcome {
    let start = Instant::now();
    let built = CubicInvariants::build().map_err(|e| e.to_string())?;
    let c = &built.certificate;
    ensure(proportionality(&c.delta, &weierstrass_delta_target()) == Some(int(1)), "Delta|W")?;
    ensure(proportionality(&c.a, &weierstrass_a_target()) == Some(int(1)), "A|W")?;
    ensure(c.holds(), "certificate")?;
    within(start, Duration::from_secs(300), "construction")?;
    let took = start.elapsed();
    let path = Path::new(env!("CARGO_TARGET_TMPDIR")).join("acceptance-invariants.json");
    write_cache(&path, &built).map_err(|e| e.to_string())?;
    std::env::set_var(CACHE_ENV, &path);
    ensure(inv().delta == built.delta, "cache reload")?;
    Ok(format!("built in {}s", took.as_secs()))
}

fn worked_example() -> Outcome {
    inv();
    let start = Instant::now();
    let u = worked();
    let r = cycle_report(&u).map_err(|e| e.to_string())?;
    ensure(r.length == int(5), format!("cycle length {}", r.length))?;
    let g = generic_j(&u).map_err(|e| e.to_string())?;
    ensure(g.val_a == Valuation::Finite(int(0)), "val A")?;
    ensure(g.val_delta == int(5), "val Delta")?;
    ensure(g.val_j == Valuation::Finite(int(-5)), "val j")?;
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for k in 0..10 {
        let f = Cubic::random_lift(&u, &mut rng).map_err(|e| e.to_string())?;
        let e = evaluate_j(&f).map_err(|e| e.to_string())?;
        ensure(e.j.valuation == Valuation::Finite(int(-5)), format!("lift {k}: {}", e.j.valuation))?;
    }
    within(start, Duration::from_secs(1), "worked example")?;
    Ok(format!("{} ms", start.elapsed().as_millis()))
}

fn main_theorem() -> Outcome {
    inv();
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for i in 0..1000 {
        let u = sample_in_u(&mut rng);
        let r = verify_main_theorem(&u).map_err(|e| format!("sample {i}: {e}"))?;
        ensure(matches!(r.case, TheoremCase::Cycle { .. }), format!("sample {i}: no cycle"))?;
        ensure(r.pass(), format!("sample {i}: {:?}", u.to_a3_strings()))?;
    }
    within(start, Duration::from_secs(120), "1000 samples")?;
    Ok(format!("1000 samples in {}s", start.elapsed().as_secs()))
}

fn newton_polytope_of_a() -> Outcome {
    let a = &inv().a;
    let vertices = a.newton_vertices().map_err(|e| e.to_string())?;
    ensure(vertices.len() == 19, format!("{} vertices", vertices.len()))?;
    let e11 = twelve_e11();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for i in 0..300 {
        let u = sample_in_u(&mut rng);
        let v = generic_valuation(a, &u).map_err(|e| e.to_string())?;
        let u11 = u.at(CENTER).unwrap().clone();
        ensure(v == Valuation::Finite(int(12) * u11), format!("sample {i}: val A"))?;
        let argmin = generic_argmin(a, &u).map_err(|e| e.to_string())?;
        ensure(argmin.contains(&e11), format!("sample {i}: argmin"))?;
        ensure(check_a_cone(&u) == Ok(true), format!("sample {i}: cone"))?;
    }
    Ok("19 vertices; 300 samples".into())
}

fn eta_case(heights: [i64; 10], eta11: i64, c11: i64) -> Result<(), String> {
    let t = regular_subdivision(&PointConfig::a3(), &HeightVector::from_a3_ints(heights)).map_err(|e| e.to_string())?;
    let cmp = compare_eta_c(&t).map_err(|e| e.to_string())?;
    ensure(cmp.pass(), format!("{heights:?}: mismatches {:?}", cmp.mismatches))?;
    ensure(cmp.eta.coefficient(CENTER) == int(eta11), format!("{heights:?}: eta"))?;
    ensure(cmp.c.coefficient(CENTER) == int(c11), format!("{heights:?}: c"))
}

fn eta_versus_c() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut seen = 0;
    while seen < 250 {
        let u = sample_in_u(&mut rng);
        let t = regular_subdivision(&PointConfig::a3(), &u).map_err(|e| e.to_string())?;
        if !t.is_triangulation() {
            continue;
        }
        let cmp = compare_eta_c(&t).map_err(|e| e.to_string())?;
        ensure(cmp.pass(), format!("mismatch at {:?}", cmp.mismatches))?;
        seen += 1;
    }
    eta_case(WORKED_EXAMPLE_HEIGHTS, 7, -5)?;
    eta_case([0, 2, 2, 1, 4, 0, 3, 4, 0, 1], 3, -9)?;
    eta_case([0, 3, 1, 3, 3, 2, 2, 0, 0, 1], 6, -6)?;
    Ok(format!("{seen} triangulations; 7/-5, 3/-9, 6/-6"))
}

fn groebner_coarsening() -> Outcome {
    let delta = &inv().delta;
    let config = PointConfig::a3();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut pairs = 0;
    while pairs < 200 {
        let u = sample_heights(&mut rng);
        let t = regular_subdivision(&config, &u).map_err(|e| e.to_string())?;
        if !(t.is_triangulation() && t.uses_all_points()) {
            continue;
        }
        let bump = sample_heights(&mut rng).scaled(&ratio(1, 64));
        let v = u.plus(&bump);
        if regular_subdivision(&config, &v).map_err(|e| e.to_string())? != t {
            continue;
        }
        let (mu, mv) = (generic_argmin(delta, &u), generic_argmin(delta, &v));
        let mu = mu.map_err(|e| e.to_string())?;
        ensure(mu.len() == 1, format!("pair {pairs}: {} minimizers", mu.len()))?;
        ensure(Ok(mu) == mv, format!("pair {pairs}: argmins differ"))?;
        pairs += 1;
    }
    Ok("200 pairs".into())
}

fn ray_catalogue() -> Outcome {
    inv();
    let reps = enumerate_rays(&PointConfig::a3()).map_err(|e| e.to_string())?;
    for fold in [
        RayClass::fold((3, 0), (0, 1)),
        RayClass::fold((2, 0), (0, 1)),
        RayClass::fold((1, 0), (0, 1)),
        RayClass::fold((2, 0), (0, 2)),
    ] {
        ensure(reps.iter().any(|(r, _)| *r == fold), format!("missing {fold}"))?;
    }
    let all = enumerate_rays_all();
    let mut checked = 0;
    for (ray, witness) in reps.iter().chain(all.iter()) {
        let back = classify_heights(witness).map_err(|e| e.to_string())?;
        ensure(back == *ray, format!("{ray} classified as {back}"))?;
        let report = verify_main_theorem(witness).map_err(|e| e.to_string())?;
        if report.is_applicable() {
            ensure(report.pass(), format!("{ray}: -val j differs from the cycle length"))?;
            checked += 1;
        }
    }
    Ok(format!("{} representatives, {} rays, {checked} with a cycle or shared facet", reps.len(), all.len()))
}

fn random_series(rng: &mut ChaCha8Rng, constant: Rational) -> PuiseuxSeries {
    let e = ratio(rng.gen_range(1..=4), rng.gen_range(1..=2));
    PuiseuxSeries::from_terms(vec![(int(0), constant), (e, random_nonzero(rng))], None)
}

fn no_cycle_for_positive_valuation() -> Outcome {
    inv();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for i in 0..100 {
        // y² = x³ + a4·x + a6 with val(a4) > 0 = val(a6): val j = 3·val(a4).
        let k = ratio(rng.gen_range(1..=6), rng.gen_range(1..=2));
        let a4 = PuiseuxSeries::monomial(random_nonzero(&mut rng), k.clone());
        let lead = random_nonzero(&mut rng);
        let a6 = random_series(&mut rng, lead);
        let zero = PuiseuxSeries::exact_zero;
        let f = Cubic::weierstrass(zero(), zero(), zero(), a4, a6);
        let g = loop {
            let consts: [[Rational; 3]; 3] =
                std::array::from_fn(|_| std::array::from_fn(|_| int(rng.gen_range(-3..=3))));
            let d = &consts[0][0] * (&consts[1][1] * &consts[2][2] - &consts[1][2] * &consts[2][1])
                - &consts[0][1] * (&consts[1][0] * &consts[2][2] - &consts[1][2] * &consts[2][0])
                + &consts[0][2] * (&consts[1][0] * &consts[2][1] - &consts[1][1] * &consts[2][0]);
            if !d.is_zero() {
                break consts.map(|row| row.map(|c| random_series(&mut rng, c)));
            }
        };
        let h = f.transform(&g).map_err(|e| e.to_string())?;
        let e = evaluate_j(&h).map_err(|e| format!("cubic {i}: {e}"))?;
        let v = e.j.valuation.finite().cloned().ok_or(format!("cubic {i}: j = 0"))?;
        ensure(v.is_positive(), format!("cubic {i}: val j = {v}"))?;
        ensure(v == int(3) * &k, format!("cubic {i}: val j = {v}, expected {}", int(3) * &k))?;
        let u = h.valuations().map_err(|e| e.to_string())?;
        let r = cycle_report(&u).map_err(|e| e.to_string())?;
        ensure(!r.has_cycle, format!("cubic {i}: tropicalization has a cycle"))?;
    }
    Ok("100 cubics".into())
}

fn shift_experiment() -> Outcome {
    inv();
    let large = coordinate_change_experiment(&int(2)).map_err(|e| e.to_string())?;
    ensure(large.cycle.length == int(5), format!("b = 2: length {}", large.cycle.length))?;
    ensure(large.val_j() == Some(&int(-5)), "b = 2: val j")?;
    for (b, length) in [(ratio(1, 3), ratio(13, 3)), (ratio(2, 3), ratio(14, 3))] {
        let e = coordinate_change_experiment(&b).map_err(|e| e.to_string())?;
        ensure(e.cycle.has_cycle && e.cycle.length == length, format!("b = {b}: length {}", e.cycle.length))?;
        ensure(e.generic.val_j == Valuation::Finite(-length.clone()), format!("b = {b}: generic val j"))?;
        ensure(e.val_j() == Some(&int(-5)), format!("b = {b}: evaluated val j"))?;
        ensure(e.factor_divides_initial_form, format!("b = {b}: factor does not divide"))?;
        ensure(e.factor_cancels(), format!("b = {b}: no cancellation"))?;
    }
    Ok("b = 2: 5; b = 1/3: 13/3; b = 2/3: 14/3; j = -5".into())
}

/// Removes comments, string literals and char literals.
fn strip_rust(src: &str) -> String {
    let b: Vec<char> = src.chars().collect();
    let mut out = String::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        let next = b.get(i + 1).copied();
        if c == '/' && next == Some('/') {
            while i < b.len() && b[i] != '\n' {
                i += 1;
            }
        } else if c == '/' && next == Some('*') {
            let mut depth = 0;
            while i < b.len() {
                if b[i] == '/' && b.get(i + 1) == Some(&'*') {
                    depth += 1;
                    i += 2;
                } else if b[i] == '*' && b.get(i + 1) == Some(&'/') {
                    depth -= 1;
                    i += 2;
                    if depth == 0 {
                        break;
                    }
                } else {
                    i += 1;
                }
            }
            out.push(' ');
        } else if c == 'r' && (next == Some('#') || next == Some('"')) && !prev_is_ident(&b, i) {
            let mut j = i + 1;
            let mut hashes = 0;
            while b.get(j) == Some(&'#') {
                hashes += 1;
                j += 1;
            }
            if b.get(j) != Some(&'"') {
                out.push(c);
                i += 1;
                continue;
            }
            j += 1;
            loop {
                if j >= b.len() {
                    break;
                }
                if b[j] == '"' && (0..hashes).all(|h| b.get(j + 1 + h) == Some(&'#')) {
                    j += 1 + hashes;
                    break;
                }
                j += 1;
            }
            i = j;
            out.push_str("\"\"");
        } else if c == '"' {
            i += 1;
            while i < b.len() && b[i] != '"' {
                if b[i] == '\\' {
                    i += 1;
                }
                i += 1;
            }
            i += 1;
            out.push_str("\"\"");
        } else if c == '\'' {
            if next == Some('\\') {
                i += 2;
                while i < b.len() && b[i] != '\'' {
                    i += 1;
                }
                i += 1;
                out.push_str("' '");
            } else if b.get(i + 2) == Some(&'\'') {
                i += 3;
                out.push_str("' '");
            } else {
                out.push(c);
                i += 1;
            }
        } else {
            out.push(c);
            i += 1;
        }
    }
    out
}

fn prev_is_ident(b: &[char], i: usize) -> bool {
    i > 0 && (b[i - 1].is_alphanumeric() || b[i - 1] == '_')
}

/// Float types and float literals in stripped source.
fn float_tokens(code: &str) -> Vec<String> {
    let float_types = [["f", "32"].concat(), ["f", "64"].concat()];
    let b: Vec<char> = code.chars().collect();
    let mut found = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < b.len() && (b[i].is_alphanumeric() || b[i] == '_') {
                i += 1;
            }
            let word: String = b[start..i].iter().collect();
            if float_types.contains(&word) {
                found.push(word);
            }
        } else if c.is_ascii_digit() {
            let after_dot = i > 0 && b[i - 1] == '.';
            let start = i;
            while i < b.len() && (b[i].is_alphanumeric() || b[i] == '_') {
                i += 1;
            }
            let mut word: String = b[start..i].iter().collect();
            let fractional = b.get(i) == Some(&'.') && b.get(i + 1).is_some_and(|d| d.is_ascii_digit());
            let trailing_dot = b.get(i) == Some(&'.')
                && !b.get(i + 1).is_some_and(|d| *d == '.' || d.is_alphabetic() || *d == '_');
            if fractional || trailing_dot {
                word.push('.');
            }
            let hex = word.starts_with("0x") || word.starts_with("0b") || word.starts_with("0o");
            let exponent = !hex && {
                let rest = word.trim_start_matches(|ch: char| ch.is_ascii_digit() || ch == '_' || ch == '.');
                let mut it = rest.chars();
                matches!(it.next(), Some('e' | 'E'))
                    && match it.next() {
                        Some(d) => d.is_ascii_digit(),
                        None => matches!(b.get(i), Some('+' | '-')),
                    }
            };
            let suffix = float_types.iter().any(|t| word.ends_with(t.as_str()));
            if !after_dot && (fractional || trailing_dot || exponent || suffix) {
                found.push(word);
            }
        } else {
            i += 1;
        }
    }
    found
}

fn rust_files(dir: &Path, acc: &mut Vec<std::path::PathBuf>) {
    for entry in std::fs::read_dir(dir).unwrap().flatten() {
        let p = entry.path();
        if p.is_dir() {
            rust_files(&p, acc);
        } else if p.extension().is_some_and(|e| e == "rs") {
            acc.push(p);
        }
    }
}

fn exactness_audit() -> Outcome {
    let probe = ["let x: ", "f", "64 = 1.5; // ", "f", "32\nlet s = \"", "2.0", "\"; p.0; 1..3; 0x5eed; 0usize; 3e", "-2; 1", "e4;"].concat();
    ensure(float_tokens(&strip_rust(&probe)).len() == 4, "audit probe")?;
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    let mut files = Vec::new();
    rust_files(&root.join("src"), &mut files);
    rust_files(&root.join("tests"), &mut files);
    let mut hits = Vec::new();
    for f in &files {
        let text = std::fs::read_to_string(f).map_err(|e| e.to_string())?;
        for tok in float_tokens(&strip_rust(&text)) {
            hits.push(format!("{}: {tok}", f.display()));
        }
    }
    ensure(hits.is_empty(), hits.join(", "))?;
    Ok(format!("{} files", files.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("Weierstrass certificates", weierstrass_certificates),
        ("worked example", worked_example),
        ("main theorem suite", main_theorem),
        ("Newton polytope of A", newton_polytope_of_a),
        ("eta versus c", eta_versus_c),
        ("Groebner coarsening", groebner_coarsening),
        ("ray catalogue", ray_catalogue),
        ("no cycle when val j > 0", no_cycle_for_positive_valuation),
        ("shift experiment", shift_experiment),
        ("exactness audit", exactness_audit),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name} ({detail})", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name} ({why})", n + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
