//! Regular marked subdivisions of planar configurations, chiefly A3.

mod cone;
mod config;
mod geometry;
mod heights;
mod rays;
mod regular;
mod sampling;

pub use cone::{membership_u, U_INEQUALITY_COUNT};
pub use config::{a3_index, PointConfig, A3_ORDER, CENTER};
pub use geometry::{
    convex_hull, cross, gcd, lattice_steps, locate, on_segment, orient, sub, twice_area,
    Location, Point,
};
pub use heights::HeightVector;
pub use rays::{
    classify_heights, classify_ray, enumerate_rays, enumerate_rays_all, fold_witness,
    lift_witness, orbit_representative, pinwheel_witness, RayClass, S3Element,
};
pub use regular::{plane_through, regular_subdivision, MarkedCell, MarkedSubdivision, SharedEdge};
pub use sampling::{sample_heights, sample_in_u};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubdivisionError {
    #[error("hull vertex ({}, {}) has infinite height", .0.0, .0.1)]
    InfiniteHullVertex(Point),
    #[error("no height given for ({}, {})", .0.0, .0.1)]
    MissingHeight(Point),
    #[error("({}, {}) is not an interior point", .0.0, .0.1)]
    NotInterior(Point),
    #[error("subdivisions live on different configurations")]
    ConfigMismatch,
    #[error("only the cubic configuration is supported")]
    UnsupportedConfig,
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("parse error: {0}")]
    Parse(String),
}
