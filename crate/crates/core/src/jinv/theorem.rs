//! Checks `-val_u(j) = cycle length` at a height vector.

use crate::exact::Rational;
use crate::puiseux::Valuation;
use crate::subdivision::{regular_subdivision, HeightVector, MarkedSubdivision, PointConfig, CENTER};
use crate::tropcurve::{cycle_length_closed_form, cycle_report, CycleReport};

use super::valuation::{generic_j, GenericJ};
use super::JinvError;

#[derive(Clone, Debug, PartialEq)]
pub enum TheoremCase {
    /// (1,1) is a cell vertex: the curve has a cycle.
    Cycle {
        closed_form: Rational,
        geometric: Rational,
        /// Signed per-edge lengths from vertex positions.
        signed_edges: Vec<Rational>,
        /// Lattice lengths of the cycle edges.
        lattice_edges: Vec<Rational>,
    },
    /// (1,1) lies inside an edge shared by two cells.
    SharedFacet { generalized: Rational },
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MainTheoremReport {
    pub heights: HeightVector,
    pub subdivision: MarkedSubdivision,
    pub valuations: GenericJ,
    pub case: TheoremCase,
    pub cycle: CycleReport,
}

impl MainTheoremReport {
    /// The length compared against `-val_u(j)`, if the case applies.
    pub fn length(&self) -> Option<&Rational> {
        match &self.case {
            TheoremCase::Cycle { geometric, .. } => Some(geometric),
            TheoremCase::SharedFacet { generalized } => Some(generalized),
            TheoremCase::NotApplicable => None,
        }
    }

    pub fn minus_val_j(&self) -> Option<Rational> {
        match &self.valuations.val_j {
            Valuation::Finite(v) => Some(-v),
            Valuation::Infinity => None,
        }
    }

    /// True when the case applies and every compared quantity agrees, or
    /// when the case does not apply.
    pub fn pass(&self) -> bool {
        match &self.case {
            TheoremCase::NotApplicable => true,
            TheoremCase::SharedFacet { generalized } => {
                self.minus_val_j().as_ref() == Some(generalized)
            }
            TheoremCase::Cycle {
                closed_form,
                geometric,
                signed_edges,
                lattice_edges,
            } => {
                signed_edges == lattice_edges
                    && closed_form == geometric
                    && self.minus_val_j().as_ref() == Some(geometric)
            }
        }
    }

    pub fn is_applicable(&self) -> bool {
        self.case != TheoremCase::NotApplicable
    }
}

pub fn verify_main_theorem(u: &HeightVector) -> Result<MainTheoremReport, JinvError> {
    let subdivision = regular_subdivision(&PointConfig::a3(), u)?;
    let valuations = generic_j(u)?;
    let cycle = cycle_report(u)?;
    let case = if cycle.has_cycle {
        TheoremCase::Cycle {
            closed_form: cycle_length_closed_form(u)?,
            geometric: cycle.length.clone(),
            signed_edges: cycle.edge_lengths.clone(),
            lattice_edges: cycle.cycle_edges.iter().map(|e| e.lattice_length()).collect(),
        }
    } else if cycle.generalized {
        TheoremCase::SharedFacet {
            generalized: cycle.length.clone(),
        }
    } else {
        TheoremCase::NotApplicable
    };
    debug_assert!(cycle.has_cycle == subdivision.is_interior_vertex_visible(CENTER)?);
    Ok(MainTheoremReport {
        heights: u.clone(),
        subdivision,
        valuations,
        case,
        cycle,
    })
}
