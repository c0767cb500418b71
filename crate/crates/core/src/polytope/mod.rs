//! The relaxation `P(G)` and its exact vertex set.

mod dd;
mod hrep;
pub mod linalg;
mod rational;
mod vrep;

pub use dd::{enumerate_vertices, enumerate_vertices_with, DdOptions, DEFAULT_DIM_CAP};
pub use hrep::{build_tstab_hrep, HPolytope, LinearInequality, RowTag};
pub use rational::{ParseRationalError, RatVector, Rational};
pub use vrep::{is_integral_point, polytopes_equal, stab_vertices, VRepresentation};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolytopeError {
    #[error("dimension {dim} exceeds the cap of {cap}; raise the cap explicitly to attempt it")]
    DimensionCap { dim: usize, cap: usize },
    #[error("{missing} box rows (0 <= x_v <= 1) are missing, so the region may be unbounded")]
    Unbounded { missing: usize },
    #[error("expected dimension {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}
