//! Dimension-generic exact geometric primitives.

mod point;
mod polytope;
mod simplex;
mod transform;

pub use point::Point;
pub use polytope::{fan_triangulation, SimplicialPolytope, Triangulation};
pub use simplex::{centroid, circumcenter, signed_volume, Simplex};
pub use transform::AffineMap;
