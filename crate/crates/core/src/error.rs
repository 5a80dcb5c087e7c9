use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected dimension {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("empty input")]
    Empty,
    #[error("polygon needs at least 3 vertices, found {0}")]
    TooFewVertices(usize),
    #[error("face {face} has {found} vertices, expected {expected}")]
    FaceArity {
        face: usize,
        expected: usize,
        found: usize,
    },
    #[error("face {face} references vertex {index}, but there are only {vertices}")]
    FaceIndexOutOfRange {
        face: usize,
        index: usize,
        vertices: usize,
    },
    #[error("face {face} repeats a vertex")]
    RepeatedFaceVertex { face: usize },
    #[error("fan volume is not positive; faces are misoriented or the boundary is empty")]
    NonPositiveOrientation,
    #[error("degenerate simplex (zero signed volume)")]
    DegenerateSimplex,
    #[error("polygon has zero signed area")]
    ZeroArea,
    #[error("polytope has zero signed volume")]
    ZeroVolume,
    #[error("triangulation has zero total signed volume")]
    ZeroTotalVolume,
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("rotation plane needs two distinct axes, got ({0}, {0})")]
    BadPlane(usize),
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("evaluation matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error("certification failed: {0}")]
    CertificationFailed(String),
    #[error("apex height must be positive")]
    NonpositiveHeight,
    #[error("polygon is not strictly convex and counterclockwise at vertex {0}")]
    NotConvex(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
