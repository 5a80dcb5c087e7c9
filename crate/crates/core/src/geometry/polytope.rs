use crate::geometry::{signed_volume, Point, Simplex};
use crate::scalar::Scalar;
use crate::Error;

/// A simplicial polytope given by its vertices and oriented boundary faces.
///
/// Each face `(W_1, ..., W_n)` is ordered so that the cone `(a, W_1, ..., W_n)`
/// from an interior point `a` has positive signed volume. The constructor only
/// checks the aggregate consequence of that convention: the fan volume from the
/// vertex average must be positive. Closedness of the boundary is not checked
/// combinatorially; [`SimplicialPolytope::fan_volume`] from two different apexes
/// agrees exactly when it holds.
#[derive(Debug, Clone, PartialEq)]
pub struct SimplicialPolytope<S> {
    dim: usize,
    vertices: Vec<Point<S>>,
    faces: Vec<Vec<usize>>,
}

impl<S: Scalar> SimplicialPolytope<S> {
    pub fn new(vertices: Vec<Point<S>>, faces: Vec<Vec<usize>>) -> Result<Self, Error> {
        let polytope = Self::new_unoriented(vertices, faces)?;
        let apex = polytope.vertex_average();
        if polytope.fan_volume(&apex) <= S::zero() {
            return Err(Error::NonPositiveOrientation);
        }
        Ok(polytope)
    }

    /// Validates indices and arities but not orientation.
    pub fn new_unoriented(vertices: Vec<Point<S>>, faces: Vec<Vec<usize>>) -> Result<Self, Error> {
        let dim = vertices.first().map_or(0, Point::dim);
        if dim == 0 {
            return Err(Error::Empty);
        }
        if let Some(bad) = vertices.iter().find(|v| v.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: bad.dim(),
            });
        }
        for (index, face) in faces.iter().enumerate() {
            if face.len() != dim {
                return Err(Error::FaceArity {
                    face: index,
                    expected: dim,
                    found: face.len(),
                });
            }
            if let Some(&v) = face.iter().find(|&&v| v >= vertices.len()) {
                return Err(Error::FaceIndexOutOfRange {
                    face: index,
                    index: v,
                    vertices: vertices.len(),
                });
            }
            for (k, a) in face.iter().enumerate() {
                if face[k + 1..].contains(a) {
                    return Err(Error::RepeatedFaceVertex { face: index });
                }
            }
        }
        if faces.is_empty() {
            return Err(Error::Empty);
        }
        Ok(Self {
            dim,
            vertices,
            faces,
        })
    }

    /// Closed polygon boundary as a 2-dimensional polytope (faces are edges).
    ///
    /// Clockwise polygons have their edges reversed so that the orientation
    /// convention holds.
    pub fn from_polygon(vertices: Vec<Point<S>>) -> Result<Self, Error> {
        let m = vertices.len();
        let forward: Vec<Vec<usize>> = (0..m).map(|i| vec![i, (i + 1) % m]).collect();
        let p = Self::new_unoriented(vertices, forward)?;
        if p.volume() < S::zero() {
            let faces = p.faces.iter().map(|f| vec![f[1], f[0]]).collect();
            Self::new(p.vertices, faces)
        } else {
            Self::new(p.vertices, p.faces)
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Point<S>] {
        &self.vertices
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn face_points(&self, face: &[usize]) -> Vec<Point<S>> {
        face.iter().map(|&i| self.vertices[i].clone()).collect()
    }

    pub fn vertex_average(&self) -> Point<S> {
        let sum = self
            .vertices
            .iter()
            .fold(Point::origin(self.dim), |acc, v| &acc + v);
        sum.scale(&(S::one() / S::from_integer(self.vertices.len() as i64)))
    }

    /// Sum of signed cone volumes from `apex`.
    pub fn fan_volume(&self, apex: &Point<S>) -> S {
        self.faces.iter().fold(S::zero(), |acc, face| {
            let mut vertices = vec![apex.clone()];
            vertices.extend(self.face_points(face));
            let cone = Simplex::new(vertices).expect("face arity checked on construction");
            acc + signed_volume(&cone)
        })
    }

    /// Signed volume, computed as the fan volume from the origin.
    pub fn volume(&self) -> S {
        self.fan_volume(&Point::origin(self.dim))
    }

    /// Applies `f` to every vertex. If `reverses_orientation` is set, the first
    /// two entries of every face are exchanged to restore the convention.
    pub fn map_vertices(
        &self,
        f: impl Fn(&Point<S>) -> Point<S>,
        reverses_orientation: bool,
    ) -> Self {
        let faces = if reverses_orientation {
            self.faces
                .iter()
                .map(|face| {
                    let mut face = face.clone();
                    let last = face.len() - 1;
                    face.swap(0, last.min(1));
                    face
                })
                .collect()
        } else {
            self.faces.clone()
        };
        Self {
            dim: self.dim,
            vertices: self.vertices.iter().map(f).collect(),
            faces,
        }
    }
}

/// A finite list of (possibly degenerate) simplices.
#[derive(Debug, Clone, PartialEq)]
pub struct Triangulation<S> {
    simplices: Vec<Simplex<S>>,
}

impl<S: Scalar> Triangulation<S> {
    pub fn new(simplices: Vec<Simplex<S>>) -> Self {
        Self { simplices }
    }

    pub fn simplices(&self) -> &[Simplex<S>] {
        &self.simplices
    }

    pub fn total_volume(&self) -> S {
        self.simplices
            .iter()
            .fold(S::zero(), |acc, s| acc + signed_volume(s))
    }

    /// Indices of members with zero signed volume.
    pub fn degenerate_members(&self) -> Vec<usize> {
        self.simplices
            .iter()
            .enumerate()
            .filter(|(_, s)| signed_volume(*s) == S::zero())
            .map(|(i, _)| i)
            .collect()
    }
}

/// Cone decomposition: one simplex `(apex, W_1, ..., W_n)` per oriented face.
pub fn fan_triangulation<S: Scalar>(
    polytope: &SimplicialPolytope<S>,
    apex: &Point<S>,
) -> Result<Triangulation<S>, Error> {
    if apex.dim() != polytope.dim() {
        return Err(Error::DimensionMismatch {
            expected: polytope.dim(),
            found: apex.dim(),
        });
    }
    polytope
        .faces()
        .iter()
        .map(|face| {
            let mut vertices = vec![apex.clone()];
            vertices.extend(polytope.face_points(face));
            Simplex::new(vertices)
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Triangulation::new)
}
