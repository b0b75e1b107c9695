//! Exact convex-layer peeling of integer point sets.
//!
//! The crate peels finite subsets of `Z^d` (in particular the grids `[n]^d`) by
//! repeatedly deleting the vertices of their convex hull, and instruments the process:
//! layer counts, f-vectors and volumes per layer, direction categories for primitive
//! lattice directions, and log-log exponent fits of the layer number.

pub mod analysis;
pub mod error;
pub mod export;
pub mod hull;
pub mod lattice;
pub mod oracle;
pub mod peel;
pub mod point;
pub mod suites;

pub use error::{Error, Result};
pub use hull::{extreme_points, extreme_points_of, hull_description, Facet, HullDescription};
pub use point::{LatticePoint, PointSet};
pub use peel::{
    grid_trace, peel_all, peel_once, restriction_equivalence_check, tau_grid, LayerSummary,
    PeelOptions, PeelingTrace,
};
