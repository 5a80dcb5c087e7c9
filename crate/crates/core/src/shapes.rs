//! Standard test bodies with correctly oriented boundaries.

use crate::geometry::{signed_volume, Point, Simplex, SimplicialPolytope};
use crate::scalar::Scalar;

/// Orders every face so that its cone from `center` has nonnegative volume.
///
/// Only meaningful for bodies that are star-shaped with respect to `center`.
pub fn orient_faces_about<S: Scalar>(
    vertices: &[Point<S>],
    faces: Vec<Vec<usize>>,
    center: &Point<S>,
) -> Vec<Vec<usize>> {
    faces
        .into_iter()
        .map(|mut face| {
            let mut cone = vec![center.clone()];
            cone.extend(face.iter().map(|&i| vertices[i].clone()));
            let cone = Simplex::new(cone).expect("face arity matches dimension");
            if signed_volume(&cone) < S::zero() {
                face.swap(0, 1);
            }
            face
        })
        .collect()
}

/// Boundary of `[0,1]^3`, two triangles per square facet.
pub fn unit_cube<S: Scalar>() -> SimplicialPolytope<S> {
    let vertices: Vec<Point<S>> = (0..8)
        .map(|m: i64| Point::from_ints(&[m & 1, (m >> 1) & 1, (m >> 2) & 1]))
        .collect();
    let quads = [
        [0, 1, 3, 2],
        [4, 5, 7, 6],
        [0, 1, 5, 4],
        [2, 3, 7, 6],
        [0, 2, 6, 4],
        [1, 3, 7, 5],
    ];
    let faces = quads
        .iter()
        .flat_map(|q| [vec![q[0], q[1], q[2]], vec![q[0], q[2], q[3]]])
        .collect();
    let half = S::from_ratio(1, 2);
    let center = Point::new(vec![half; 3]);
    let faces = orient_faces_about(&vertices, faces, &center);
    SimplicialPolytope::new(vertices, faces).expect("cube boundary is valid")
}

/// Boundary of the cross-polytope `conv{±e_i}` (the octahedron for `n = 3`).
pub fn cross_polytope<S: Scalar>(n: usize) -> SimplicialPolytope<S> {
    let mut vertices = Vec::with_capacity(2 * n);
    for axis in 0..n {
        for sign in [1, -1] {
            let mut c = vec![0; n];
            c[axis] = sign;
            vertices.push(Point::from_ints(&c));
        }
    }
    let faces = (0..1usize << n)
        .map(|signs| (0..n).map(|axis| 2 * axis + ((signs >> axis) & 1)).collect())
        .collect();
    let faces = orient_faces_about(&vertices, faces, &Point::origin(n));
    SimplicialPolytope::new(vertices, faces).expect("cross-polytope boundary is valid")
}

/// Boundary of the standard simplex `conv{0, e_1, ..., e_n}`.
pub fn simplex_boundary<S: Scalar>(n: usize) -> SimplicialPolytope<S> {
    let mut vertices = vec![Point::origin(n)];
    for axis in 0..n {
        let mut c = vec![0; n];
        c[axis] = 1;
        vertices.push(Point::from_ints(&c));
    }
    let faces = (0..=n)
        .map(|skip| (0..=n).filter(|&v| v != skip).collect())
        .collect();
    let inner = Point::new(vec![S::from_ratio(1, n as i64 + 1); n]);
    let faces = orient_faces_about(&vertices, faces, &inner);
    SimplicialPolytope::new(vertices, faces).expect("simplex boundary is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio, Rational};

    #[test]
    fn volumes() {
        assert_eq!(unit_cube::<Rational>().volume(), int(1));
        assert_eq!(cross_polytope::<Rational>(2).volume(), int(2));
        assert_eq!(cross_polytope::<Rational>(3).volume(), ratio(4, 3));
        assert_eq!(cross_polytope::<Rational>(4).volume(), ratio(2, 3));
        assert_eq!(simplex_boundary::<Rational>(3).volume(), ratio(1, 6));
    }
}
