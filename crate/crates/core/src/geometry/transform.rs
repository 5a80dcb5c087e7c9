use crate::geometry::{Point, Simplex, SimplicialPolytope};
use crate::linalg;
use crate::scalar::Scalar;

/// Affine map `x -> L x + offset`.
///
/// The constructors below produce rational isometries (translations, plane
/// rotations from Pythagorean triples, coordinate swaps, reflections) and
/// uniform scalings, so covariance checks stay exact.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineMap<S> {
    linear: Vec<Vec<S>>,
    offset: Vec<S>,
}

impl<S: Scalar> AffineMap<S> {
    pub fn new(linear: Vec<Vec<S>>, offset: Vec<S>) -> Self {
        debug_assert!(linear.iter().all(|r| r.len() == offset.len()));
        Self { linear, offset }
    }

    pub fn identity(dim: usize) -> Self {
        let linear = (0..dim)
            .map(|i| (0..dim).map(|j| if i == j { S::one() } else { S::zero() }).collect())
            .collect();
        Self::new(linear, vec![S::zero(); dim])
    }

    pub fn translation(offset: Vec<S>) -> Self {
        let mut map = Self::identity(offset.len());
        map.offset = offset;
        map
    }

    /// Rotation in the `(a, b)` coordinate plane with the given cosine and sine.
    ///
    /// `cos^2 + sin^2` must be 1; on the exact backend use a Pythagorean triple
    /// such as `(3/5, 4/5)`.
    pub fn plane_rotation(dim: usize, a: usize, b: usize, cos: S, sin: S) -> Self {
        let mut map = Self::identity(dim);
        map.linear[a][a] = cos.clone();
        map.linear[b][b] = cos;
        map.linear[a][b] = -sin.clone();
        map.linear[b][a] = sin;
        map
    }

    pub fn coordinate_swap(dim: usize, a: usize, b: usize) -> Self {
        let mut map = Self::identity(dim);
        map.linear.swap(a, b);
        map
    }

    /// Reflection in the hyperplane `x_axis = 0`.
    pub fn reflection(dim: usize, axis: usize) -> Self {
        let mut map = Self::identity(dim);
        map.linear[axis][axis] = -S::one();
        map
    }

    pub fn scaling(dim: usize, factor: S) -> Self {
        let mut map = Self::identity(dim);
        for (i, row) in map.linear.iter_mut().enumerate() {
            row[i] = factor.clone();
        }
        map
    }

    pub fn dim(&self) -> usize {
        self.offset.len()
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &Self) -> Self {
        let n = self.dim();
        let linear = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(S::zero(), |acc, k| {
                            acc + self.linear[i][k].clone() * first.linear[k][j].clone()
                        })
                    })
                    .collect()
            })
            .collect();
        let offset = self.apply(&Point::new(first.offset.clone())).into_coords();
        Self::new(linear, offset)
    }

    pub fn apply(&self, p: &Point<S>) -> Point<S> {
        Point::new(
            self.linear
                .iter()
                .zip(&self.offset)
                .map(|(row, t)| {
                    row.iter()
                        .zip(p.coords())
                        .fold(t.clone(), |acc, (a, x)| acc + a.clone() * x.clone())
                })
                .collect(),
        )
    }

    pub fn reverses_orientation(&self) -> bool {
        linalg::determinant(&self.linear) < S::zero()
    }

    pub fn apply_simplex(&self, s: &Simplex<S>) -> Simplex<S> {
        s.map_vertices(|v| self.apply(v))
    }

    /// Image polytope, with faces reordered if the map reverses orientation.
    pub fn apply_polytope(&self, p: &SimplicialPolytope<S>) -> SimplicialPolytope<S> {
        p.map_vertices(|v| self.apply(v), self.reverses_orientation())
    }
}
