//! Command-line front end.
//!
//! Exit codes: 0 success, 1 invalid input, 2 failed check or singular
//! curve, 3 truncation insufficient.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::Value;
use thiserror::Error;

use crate::exact::{format_rational, parse_rational, Rational};
use crate::jinv::{
    self, coordinate_change_experiment, evaluate_j, generic_j, verify_main_theorem, Cubic,
    CubicInvariants, JinvError, MainTheoremReport, TheoremCase, WORKED_EXAMPLE_HEIGHTS,
};
use crate::puiseux::{PuiseuxError, Valuation};
use crate::subdivision::{
    classify_heights, enumerate_rays, sample_in_u, HeightVector, MarkedSubdivision, PointConfig,
    A3_ORDER,
};
use crate::tropcurve::{cycle_report, dual_curve, render, CycleReport, RenderFormat, RenderOptions};

#[derive(Parser, Debug)]
#[command(name = "tropj", version, about = "Tropical plane cubics and the valuation of j")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dual subdivision, tropical curve and cycle length.
    Tropicalize {
        /// Heights file or cubic file (JSON).
        input: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Also print an ASCII drawing.
        #[arg(long)]
        ascii: bool,
    },
    /// Generic valuations of A, Δ and j; for a cubic also val(j(f)).
    Jval { input: PathBuf },
    /// Checks -val_u(j) = cycle length on random heights in U.
    Verify {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Replace the first sample by the example with cycle length 5.
        #[arg(long)]
        pin_example: bool,
    },
    /// Lift, fold and pinwheel rays up to symmetry.
    Rays {
        /// Witness heights with cycle lengths and valuations.
        #[arg(long)]
        catalog: bool,
    },
    /// Applies (x, y) -> (x + t^b, y) to the example cubic.
    ShiftExperiment {
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Builds S, A and Δ and writes the cache.
    BuildInvariants {
        /// Defaults to $TROPJ_INVARIANTS_CACHE or a file next to the binary.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Rebuild even if a valid cache exists.
        #[arg(long)]
        force: bool,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Failed(String),
    #[error("{0}")]
    Truncation(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 1,
            CliError::Failed(_) => 2,
            CliError::Truncation(_) => 3,
        }
    }
}

impl From<JinvError> for CliError {
    fn from(e: JinvError) -> Self {
        let msg = e.to_string();
        match e {
            JinvError::Singular | JinvError::GenericallySingular => CliError::Failed(msg),
            JinvError::TruncationInsufficient
            | JinvError::Puiseux(PuiseuxError::Indeterminate(_)) => CliError::Truncation(msg),
            JinvError::Construction(_) | JinvError::Normalization(_) => CliError::Failed(msg),
            _ => CliError::Invalid(msg),
        }
    }
}

impl From<crate::tropcurve::TropError> for CliError {
    fn from(e: crate::tropcurve::TropError) -> Self {
        JinvError::from(e).into()
    }
}

impl From<crate::subdivision::SubdivisionError> for CliError {
    fn from(e: crate::subdivision::SubdivisionError) -> Self {
        JinvError::from(e).into()
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}

/// Parses arguments, runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                write!(out, "{text}").ok();
            } else {
                write!(err, "{text}").ok();
            }
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            writeln!(err, "error: {e}").ok();
            e.exit_code()
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<(), CliError> {
    match cmd {
        Command::Tropicalize {
            input,
            svg,
            json,
            ascii,
        } => cmd_tropicalize(&input, svg.as_deref(), json.as_deref(), ascii, out),
        Command::Jval { input } => cmd_jval(&input, out),
        Command::Verify {
            samples,
            seed,
            pin_example,
        } => cmd_verify(samples, seed, pin_example, out),
        Command::Rays { catalog } => cmd_rays(catalog, out),
        Command::ShiftExperiment { b } => {
            let b = parse_rational(&b).map_err(|e| CliError::Invalid(e.to_string()))?;
            cmd_shift_experiment(&b, out)
        }
        Command::BuildInvariants { output, force } => cmd_build_invariants(output, force, out),
    }
}

/// Contents of an input file.
#[derive(Clone, Debug, PartialEq)]
pub enum Input {
    Heights(HeightVector),
    Cubic(Cubic),
}

impl Input {
    /// Heights object (`u..` keys) or 10-element array, or a cubic object
    /// (`a..` keys).
    pub fn from_json(v: &Value) -> Result<Self, CliError> {
        let invalid = |e: &dyn std::fmt::Display| CliError::Invalid(e.to_string());
        match v {
            Value::Array(_) => Ok(Input::Heights(
                HeightVector::from_json(v).map_err(|e| invalid(&e))?,
            )),
            Value::Object(m) if !m.is_empty() && m.keys().all(|k| k.starts_with('u')) => Ok(
                Input::Heights(HeightVector::from_json(v).map_err(|e| invalid(&e))?),
            ),
            Value::Object(m) if !m.is_empty() && m.keys().all(|k| k.starts_with('a')) => {
                Ok(Input::Cubic(Cubic::from_json(v).map_err(|e| invalid(&e))?))
            }
            _ => Err(CliError::Invalid(
                "expected heights (u00..u30 or an array of 10) or a cubic (a00..a30)".into(),
            )),
        }
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))?;
        let v: Value = serde_json::from_str(&text)
            .map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))?;
        Self::from_json(&v)
    }

    pub fn heights(&self) -> Result<HeightVector, CliError> {
        match self {
            Input::Heights(u) => Ok(u.clone()),
            Input::Cubic(f) => Ok(f.valuations()?),
        }
    }
}

fn q(r: &Rational) -> String {
    format_rational(r)
}

fn val(v: &Valuation) -> String {
    v.to_string()
}

fn heights_line(u: &HeightVector) -> String {
    A3_ORDER
        .iter()
        .zip(u.to_a3_strings())
        .map(|(p, s)| format!("u{}{}={}", p.0, p.1, s))
        .collect::<Vec<_>>()
        .join(" ")
}

fn write_subdivision(s: &MarkedSubdivision, out: &mut dyn Write) -> Result<(), CliError> {
    writeln!(out, "subdivision: {} cells", s.cells().len())?;
    for c in s.cells() {
        let pts = |ps: &[(i64, i64)]| {
            ps.iter()
                .map(|p| format!("({},{})", p.0, p.1))
                .collect::<Vec<_>>()
                .join(" ")
        };
        if c.marked().len() == c.vertices().len() {
            writeln!(out, "  cell {}", pts(c.vertices()))?;
        } else {
            writeln!(out, "  cell {} marked {}", pts(c.vertices()), pts(c.marked()))?;
        }
    }
    Ok(())
}

fn write_cycle(r: &CycleReport, out: &mut dyn Write) -> Result<(), CliError> {
    if r.has_cycle {
        let nbrs: Vec<String> = r.neighbors.iter().map(|p| format!("({},{})", p.0, p.1)).collect();
        let lens: Vec<String> = r.cycle_edges.iter().map(|e| q(&e.lattice_length())).collect();
        writeln!(out, "neighbors of (1,1), clockwise: {}", nbrs.join(" "))?;
        writeln!(out, "cycle edge lengths: {}", lens.join(" "))?;
        writeln!(out, "cycle length = {}", q(&r.length))?;
    } else if r.generalized {
        writeln!(out, "generalized cycle length = {}", q(&r.length))?;
    } else {
        writeln!(out, "no cycle; length = 0")?;
    }
    Ok(())
}

fn cmd_tropicalize(
    input: &Path,
    svg: Option<&Path>,
    json: Option<&Path>,
    ascii: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let u = Input::load(input)?.heights()?;
    let curve = dual_curve(&u)?;
    let report = cycle_report(&u)?;
    writeln!(out, "heights: {}", heights_line(&u))?;
    write_subdivision(&curve.subdivision, out)?;
    writeln!(
        out,
        "curve: {} vertices, {} bounded edges, {} rays",
        curve.vertices.len(),
        curve.edges.len(),
        curve.rays.len()
    )?;
    write_cycle(&report, out)?;
    let opts = RenderOptions::default();
    if ascii {
        write!(out, "{}", render(&u, RenderFormat::Ascii, &opts)?)?;
    }
    if let Some(path) = svg {
        std::fs::write(path, render(&u, RenderFormat::Svg, &opts)?)?;
    }
    if let Some(path) = json {
        let mut v = curve.to_json();
        if let Value::Object(m) = &mut v {
            m.insert("heights".into(), u.to_json());
            m.insert(
                "cycle".into(),
                serde_json::json!({
                    "kind": if report.has_cycle { "cycle" } else if report.generalized { "generalized" } else { "none" },
                    "length": q(&report.length),
                }),
            );
        }
        let text = serde_json::to_string_pretty(&v).expect("serializable");
        std::fs::write(path, text + "\n")?;
    }
    Ok(())
}

fn cmd_jval(input: &Path, out: &mut dyn Write) -> Result<(), CliError> {
    let parsed = Input::load(input)?;
    let u = parsed.heights()?;
    match generic_j(&u) {
        Ok(g) => {
            writeln!(out, "val_u(A) = {}", val(&g.val_a))?;
            writeln!(out, "val_u(Delta) = {}", q(&g.val_delta))?;
            writeln!(out, "val_u(j) = {}", val(&g.val_j))?;
        }
        Err(JinvError::GenericallySingular) => {
            writeln!(out, "val_u(Delta) = inf")?;
            return Err(JinvError::GenericallySingular.into());
        }
        Err(e) => return Err(e.into()),
    }
    if let Input::Cubic(f) = parsed {
        let e = evaluate_j(&f)?;
        writeln!(out, "val(j(f)) = {}", val(&e.j.valuation))?;
        if let Some(lc) = &e.j.leading {
            writeln!(out, "lc(j(f)) = {}", q(lc))?;
        }
    }
    Ok(())
}

/// Heights used by `verify`, in sample order.
pub fn verify_samples(samples: usize, seed: u64, pin_example: bool) -> Vec<HeightVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut us: Vec<HeightVector> = (0..samples).map(|_| sample_in_u(&mut rng)).collect();
    if pin_example && samples > 0 {
        us[0] = HeightVector::from_a3_ints(WORKED_EXAMPLE_HEIGHTS);
    }
    us
}

fn describe(r: &MainTheoremReport) -> String {
    let lhs = r.minus_val_j().map_or("inf".to_string(), |v| q(&v));
    match &r.case {
        TheoremCase::Cycle {
            closed_form,
            geometric,
            signed_edges,
            lattice_edges,
        } => format!(
            "-val_u(j) = {lhs}, cycle length = {} (closed form {}), edges {:?} vs {:?}",
            q(geometric),
            q(closed_form),
            signed_edges.iter().map(q).collect::<Vec<_>>(),
            lattice_edges.iter().map(q).collect::<Vec<_>>()
        ),
        TheoremCase::SharedFacet { generalized } => {
            format!("-val_u(j) = {lhs}, generalized cycle length = {}", q(generalized))
        }
        TheoremCase::NotApplicable => format!("-val_u(j) = {lhs}, no cycle"),
    }
}

fn cmd_verify(samples: usize, seed: u64, pin_example: bool, out: &mut dyn Write) -> Result<(), CliError> {
    if samples == 0 {
        return Err(CliError::Invalid("--samples must be at least 1".into()));
    }
    jinv::invariants()?;
    let us = verify_samples(samples, seed, pin_example);
    let results: Vec<Result<MainTheoremReport, JinvError>> =
        us.par_iter().map(verify_main_theorem).collect();
    let mut failures = 0usize;
    let mut cycles = 0usize;
    for (i, (u, r)) in us.iter().zip(&results).enumerate() {
        match r {
            Ok(rep) if rep.pass() && rep.is_applicable() => {
                cycles += usize::from(matches!(rep.case, TheoremCase::Cycle { .. }));
            }
            Ok(rep) => {
                failures += 1;
                writeln!(out, "sample {i}: FAIL heights {}: {}", heights_line(u), describe(rep))?;
            }
            Err(e) => {
                failures += 1;
                writeln!(out, "sample {i}: ERROR heights {}: {e}", heights_line(u))?;
            }
        }
    }
    writeln!(
        out,
        "verified {samples} samples (seed {seed}): {} passed, {failures} failed, {cycles} with a cycle",
        samples - failures
    )?;
    if failures > 0 {
        return Err(CliError::Failed(format!("{failures} counterexamples")));
    }
    Ok(())
}

fn cmd_rays(catalog: bool, out: &mut dyn Write) -> Result<(), CliError> {
    let rays = enumerate_rays(&PointConfig::a3())?;
    let mut bad = 0usize;
    for (class, witness) in &rays {
        if !catalog {
            writeln!(out, "{class}")?;
            continue;
        }
        let back = classify_heights(witness)?;
        let report = verify_main_theorem(witness)?;
        let ok = back == *class && report.pass();
        bad += usize::from(!ok);
        writeln!(out, "{class}")?;
        writeln!(out, "  witness: {}", heights_line(witness))?;
        writeln!(out, "  classified back as: {back}")?;
        writeln!(out, "  {}", describe(&report))?;
        writeln!(out, "  {}", if ok { "agree" } else { "DISAGREE" })?;
    }
    writeln!(out, "{} rays up to symmetry", rays.len())?;
    if bad > 0 {
        return Err(CliError::Failed(format!("{bad} rays disagree")));
    }
    Ok(())
}

fn cmd_shift_experiment(b: &Rational, out: &mut dyn Write) -> Result<(), CliError> {
    let e = coordinate_change_experiment(b)?;
    writeln!(out, "b = {}", q(b))?;
    writeln!(out, "valuations after the shift:")?;
    for (p, s) in A3_ORDER.iter().zip(e.heights.to_a3_strings()) {
        writeln!(out, "  u{}{} = {}", p.0, p.1, s)?;
    }
    write_subdivision(&e.subdivision, out)?;
    if e.same_as_unshifted {
        writeln!(out, "subdivision unchanged by the shift")?;
    } else {
        writeln!(out, "subdivision switch: differs from the unshifted subdivision")?;
    }
    write_cycle(&e.cycle, out)?;
    writeln!(out, "val_u(j) = {}", val(&e.generic.val_j))?;
    writeln!(out, "val(j(f)) = {}", val(&e.evaluated.j.valuation))?;
    writeln!(out, "t-initial form of Delta: {}", e.initial_form)?;
    writeln!(
        out,
        "a01*a12 - a11*a02 on leading terms: {}{}",
        e.factor_on_leading_terms,
        if e.factor_cancels() { " (cancels)" } else { "" }
    )?;
    Ok(())
}

fn cmd_build_invariants(output: Option<PathBuf>, force: bool, out: &mut dyn Write) -> Result<(), CliError> {
    let path = output.unwrap_or_else(jinv::default_cache_path);
    let inv = if force {
        CubicInvariants::build()?
    } else {
        jinv::load_or_build(&path)?
    };
    jinv::write_cache(&path, &inv)?;
    writeln!(
        out,
        "S: {} terms, A: {} terms, Delta: {} terms",
        inv.s.num_terms(),
        inv.a.num_terms(),
        inv.delta.num_terms()
    )?;
    writeln!(out, "Weierstrass certificate: {}", if inv.certificate.holds() { "ok" } else { "FAILED" })?;
    writeln!(out, "written to {}", path.display())?;
    Ok(())
}
