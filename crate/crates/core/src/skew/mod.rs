//! Skew determinants and the coefficient calculus for isometry-covariant
//! centers of simplices.

pub mod certify;
pub mod coefficients;
pub mod constraints;
pub mod determinants;

pub use certify::{basis_rank_check, certify_uniqueness, uniqueness_report, RankReport, UniquenessReport};
pub use coefficients::{ccm_coefficients, cm_coefficients, CenterCoefficients, CoefficientKey};
pub use constraints::{build_constraint_system, solve_affine_space, AffineSolution, ConstraintSystem};
pub use determinants::{eval_v, eval_x, rotation_action, translation_action, Configuration};
