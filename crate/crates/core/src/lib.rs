//! Exact centers of simplicial polytopes.
//!
//! Computes the center of mass, the circumcenter of mass and the generalized
//! Euler line of polygons and simplicial polytopes over exact rationals or
//! `f64`, and certifies the structural identities behind them: triangulation
//! independence, subdivision additivity, the determinant basis of skew
//! polynomials and the uniqueness of isometry-covariant polynomial centers.

pub mod centers;
pub mod exact_serde;
mod error;
pub mod geometry;
pub mod linalg;
pub mod random;
pub mod scalar;
pub mod shapes;
pub mod skew;
pub mod suites;
pub mod valuation;

pub use error::Error;
pub use scalar::{Rational, Scalar};
