//! Number-theoretic and lattice-geometric helpers.

mod arith;
mod directions;
mod hyperplanes;
mod normal;
mod orthogonal;

pub use arith::{jordan_partial_sum, jordan_totient, mobius, zeta};
pub use directions::{census_report, enumerate_directions, CensusReport, DirectionSet, PrimitiveVector};
pub use hyperplanes::hyperplane_count;
pub use normal::primitive_normal;
pub use orthogonal::{
    calibrate_alpha, filter_directions, filter_radius, shortest_orthogonal_vector, Calibration, ShortVectors,
    ALPHA_GRID, CALIBRATED_ALPHA_3,
};
