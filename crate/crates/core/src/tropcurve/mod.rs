//! Tropical plane cubics dual to regular subdivisions of A3.

mod curve;
mod cycle;
mod render;

pub use curve::{dual_curve, CurveEdge, CurveRay, CurveVertex, TropicalCurve};
pub use cycle::{
    closed_form_coefficients, cycle_length_closed_form, cycle_length_oriented, cycle_report,
    generalized_cycle_length, neighbors_clockwise, CycleReport, Orientation,
};
pub use render::{render, svg_is_well_formed, RenderFormat, RenderOptions};

use thiserror::Error;

use crate::subdivision::SubdivisionError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TropError {
    #[error(transparent)]
    Subdivision(#[from] SubdivisionError),
    #[error("(1,1) is not a vertex of the subdivision")]
    NoCycle,
    #[error("(1,1) is not in the relative interior of a facet shared by two cells")]
    NotOnSharedFacet,
    #[error("the subdivision already has a cycle")]
    HasCycle,
    #[error("cell {0} has no three affinely independent lifted vertices")]
    DegenerateCell(usize),
}
