use crate::geometry::Point;
use crate::linalg;
use crate::scalar::Scalar;
use crate::Error;

/// An ordered simplex `(V_0, ..., V_n)` in `R^n`.
///
/// Vertex order carries orientation; degenerate simplices are valid values.
#[derive(Debug, Clone, PartialEq)]
pub struct Simplex<S> {
    vertices: Vec<Point<S>>,
}

impl<S: Scalar> Simplex<S> {
    pub fn new(vertices: Vec<Point<S>>) -> Result<Self, Error> {
        let n = vertices.len().saturating_sub(1);
        if n == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        if let Some(bad) = vertices.iter().find(|v| v.dim() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.dim(),
            });
        }
        Ok(Self { vertices })
    }

    pub fn from_ints(vertices: &[&[i64]]) -> Result<Self, Error> {
        Self::new(vertices.iter().map(|v| Point::from_ints(v)).collect())
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn vertices(&self) -> &[Point<S>] {
        &self.vertices
    }

    pub fn vertex(&self, index: usize) -> &Point<S> {
        &self.vertices[index]
    }

    /// The simplex with vertices `a` and `b` exchanged.
    pub fn swapped(&self, a: usize, b: usize) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.swap(a, b);
        Self { vertices }
    }

    /// The simplex with vertex `index` replaced by `point`.
    pub fn with_vertex(&self, index: usize, point: Point<S>) -> Self {
        let mut vertices = self.vertices.clone();
        vertices[index] = point;
        Self { vertices }
    }

    /// Maps every vertex, possibly into another backend.
    pub fn map_to<T>(&self, f: impl Fn(&Point<S>) -> Point<T>) -> Simplex<T> {
        Simplex {
            vertices: self.vertices.iter().map(f).collect(),
        }
    }

    pub fn map_vertices(&self, f: impl Fn(&Point<S>) -> Point<S>) -> Self {
        Self {
            vertices: self.vertices.iter().map(f).collect(),
        }
    }

    /// Rows `V_k - V_0` for `k = 1..=n`.
    pub(crate) fn edge_rows(&self) -> Vec<Vec<S>> {
        let base = &self.vertices[0];
        self.vertices[1..]
            .iter()
            .map(|v| (v - base).into_coords())
            .collect()
    }

    /// `|V_k|^2 - |V_0|^2` for `k = 1..=n`.
    pub(crate) fn lifted_differences(&self) -> Vec<S> {
        let base = self.vertices[0].norm_squared();
        self.vertices[1..]
            .iter()
            .map(|v| v.norm_squared() - base.clone())
            .collect()
    }
}

/// Oriented volume `det(V_1 - V_0, ..., V_n - V_0) / n!`.
///
/// The same value is the determinant of the bordered matrix with columns
/// `(1; V_j)`, divided by `n!`.
pub fn signed_volume<S: Scalar>(simplex: &Simplex<S>) -> S {
    linalg::determinant(&simplex.edge_rows()) / S::factorial(simplex.dim())
}

/// Center of the circumscribed sphere.
///
/// Solves `2 (V_k - V_0) . x = |V_k|^2 - |V_0|^2` for `k = 1..=n`.
pub fn circumcenter<S: Scalar>(simplex: &Simplex<S>) -> Result<Point<S>, Error> {
    let two = S::from_integer(2);
    let rows: Vec<Vec<S>> = simplex
        .edge_rows()
        .into_iter()
        .map(|r| r.into_iter().map(|v| v * two.clone()).collect())
        .collect();
    linalg::solve(&rows, &simplex.lifted_differences())
        .map(Point::new)
        .ok_or(Error::DegenerateSimplex)
}

/// Vertex average.
pub fn centroid<S: Scalar>(simplex: &Simplex<S>) -> Point<S> {
    let n = simplex.dim();
    let sum = simplex
        .vertices()
        .iter()
        .fold(Point::origin(n), |acc, v| &acc + v);
    sum.scale(&(S::one() / S::from_integer(n as i64 + 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio, Rational};

    fn tri(v: &[&[i64]]) -> Simplex<Rational> {
        Simplex::from_ints(v).unwrap()
    }

    #[test]
    fn standard_simplices() {
        assert_eq!(signed_volume(&tri(&[&[0, 0], &[1, 0], &[0, 1]])), ratio(1, 2));
        let tet = tri(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(signed_volume(&tet), ratio(1, 6));
        assert_eq!(signed_volume(&tet.swapped(1, 3)), ratio(-1, 6));
    }

    #[test]
    fn repeated_vertex_has_zero_volume() {
        let s = tri(&[&[2, 5], &[-1, 3], &[2, 5]]);
        assert_eq!(signed_volume(&s), int(0));
        assert!(matches!(circumcenter(&s), Err(Error::DegenerateSimplex)));
    }

    #[test]
    fn right_angle_circumcenter_is_hypotenuse_midpoint() {
        let s = tri(&[&[-1, 0], &[1, 0], &[0, 1]]);
        assert_eq!(circumcenter(&s).unwrap(), Point::from_ints(&[0, 0]));
    }

    #[test]
    fn regular_tetrahedron_centered_at_origin() {
        let s = tri(&[&[1, 1, 1], &[1, -1, -1], &[-1, 1, -1], &[-1, -1, 1]]);
        assert_eq!(circumcenter(&s).unwrap(), Point::origin(3));
        assert_eq!(centroid(&s), Point::origin(3));
    }

    #[test]
    fn centroids() {
        assert_eq!(
            centroid(&tri(&[&[0, 0], &[3, 0], &[0, 3]])),
            Point::from_ints(&[1, 1])
        );
        let tet = tri(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let q = ratio(1, 4);
        assert_eq!(centroid(&tet), Point::new(vec![q.clone(), q.clone(), q]));
    }

    #[test]
    fn float_backend_agrees() {
        let s: Simplex<f64> = Simplex::from_ints(&[&[0, 0], &[4, 0], &[1, 3]]).unwrap();
        let c = circumcenter(&s).unwrap();
        assert!(c.close_to(&Point::new(vec![2.0, 1.0]), 1e-12));
        assert!((signed_volume(&s) - 6.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_wrong_dimension() {
        let bad = Simplex::<Rational>::new(vec![Point::from_ints(&[0, 0]), Point::from_ints(&[1, 0])]);
        assert!(matches!(bad, Err(Error::DimensionMismatch { .. })));
    }
}
