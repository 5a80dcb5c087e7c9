//! Experiments on `phi = Vol * CCM` as a valuation.

pub mod experiments;
pub mod limit;
pub mod moment;
pub mod symbolic;

pub use experiments::{
    degenerate_triangle_demo, k_alpha, k_alpha_phi, not_valuation_demo, DegenerateTriangleReport,
    NotValuationReport, NotValuationRow, DEFAULT_COEFFICIENT_THRESHOLD,
};
pub use limit::{continuous_limit, LimitResult, StarCurve};
pub use moment::{moment_polynomial, MomentPolynomial};
pub use symbolic::{Atom, ExactReal};
