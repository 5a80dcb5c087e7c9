//! Centers of mass, circumcenters of mass and the generalized Euler line.
//!
//! The circumcenter of mass is reachable three ways: the closed-form polygon
//! formula, the boundary-face determinant formula for simplicial polytopes,
//! and the signed-volume weighted average of simplex circumcenters over any
//! triangulation. Triangulation sums go through [`phi_simplex`], the
//! division-free product `Vol * CC`, so degenerate members contribute their
//! polynomial limit instead of being skipped.

use serde::Serialize;

use crate::geometry::{
    centroid, fan_triangulation, signed_volume, Point, Simplex, SimplicialPolytope, Triangulation,
};
use crate::linalg;
use crate::scalar::Scalar;
use crate::Error;

/// A polygon in the plane, vertices in cyclic order.
///
/// Either orientation is accepted; the signed area carries it. Self-intersecting
/// polygons are allowed (signed-measure semantics) as long as the area is
/// nonzero when a center is requested.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon2D<S> {
    vertices: Vec<Point<S>>,
}

impl<S: Scalar> Polygon2D<S> {
    pub fn new(vertices: Vec<Point<S>>) -> Result<Self, Error> {
        if vertices.len() < 3 {
            return Err(Error::TooFewVertices(vertices.len()));
        }
        if let Some(bad) = vertices.iter().find(|v| v.dim() != 2) {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: bad.dim(),
            });
        }
        Ok(Self { vertices })
    }

    pub fn from_ints(vertices: &[[i64; 2]]) -> Result<Self, Error> {
        Self::new(vertices.iter().map(|v| Point::from_ints(v)).collect())
    }

    pub fn vertices(&self) -> &[Point<S>] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    fn xy(&self, i: usize) -> (S, S) {
        let v = &self.vertices[i % self.len()];
        (v[0].clone(), v[1].clone())
    }

    /// Shoelace area, positive for counterclockwise order.
    pub fn signed_area(&self) -> S {
        let m = self.len();
        let twice = (0..m).fold(S::zero(), |acc, i| {
            let (x0, y0) = self.xy(i);
            let (x1, y1) = self.xy(i + 1);
            acc + x0 * y1 - x1 * y0
        });
        twice / S::from_integer(2)
    }

    pub fn map_vertices(&self, f: impl Fn(&Point<S>) -> Point<S>) -> Self {
        Self {
            vertices: self.vertices.iter().map(f).collect(),
        }
    }

    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Self { vertices }
    }

    /// Fan triangulation `(apex, v_i, v_{i+1})`.
    pub fn fan(&self, apex: &Point<S>) -> Triangulation<S> {
        let m = self.len();
        Triangulation::new(
            (0..m)
                .map(|i| {
                    Simplex::new(vec![
                        apex.clone(),
                        self.vertices[i].clone(),
                        self.vertices[(i + 1) % m].clone(),
                    ])
                    .expect("planar points")
                })
                .collect(),
        )
    }

    /// The edge encoding as a polytope whose faces are the edges.
    pub fn to_polytope(&self) -> Result<SimplicialPolytope<S>, Error> {
        SimplicialPolytope::from_polygon(self.vertices.clone())
    }
}

/// Area centroid of a polygonal lamina, `1/(6A)` times the shoelace moments.
pub fn cm_polygon<S: Scalar>(p: &Polygon2D<S>) -> Result<Point<S>, Error> {
    let area = p.signed_area();
    if area.is_zero() {
        return Err(Error::ZeroArea);
    }
    let (mut sx, mut sy) = (S::zero(), S::zero());
    for i in 0..p.len() {
        let (x0, y0) = p.xy(i);
        let (x1, y1) = p.xy(i + 1);
        let cross = x0.clone() * y1.clone() - x1.clone() * y0.clone();
        sx = sx + (x0 + x1) * cross.clone();
        sy = sy + (y0 + y1) * cross;
    }
    let scale = S::one() / (S::from_integer(6) * area);
    Ok(Point::new(vec![sx * scale.clone(), sy * scale]))
}

/// `A(P) * CCM(P)` for a polygon, division free:
/// `1/4 * sum_i (y_i, -x_i) * (|v_{i-1}|^2 - |v_{i+1}|^2)`.
pub fn phi_polygon<S: Scalar>(p: &Polygon2D<S>) -> Point<S> {
    let m = p.len();
    let (mut sx, mut sy) = (S::zero(), S::zero());
    for i in 0..m {
        let (x, y) = p.xy(i);
        let prev = p.vertices[(i + m - 1) % m].norm_squared();
        let next = p.vertices[(i + 1) % m].norm_squared();
        let d = prev - next;
        sx = sx + y * d.clone();
        sy = sy - x * d;
    }
    let quarter = S::one() / S::from_integer(4);
    Point::new(vec![sx * quarter.clone(), sy * quarter])
}

/// Circumcenter of mass of a polygon by the closed-form coordinate formula.
pub fn ccm_polygon<S: Scalar>(p: &Polygon2D<S>) -> Result<Point<S>, Error> {
    let area = p.signed_area();
    if area.is_zero() {
        return Err(Error::ZeroArea);
    }
    Ok(phi_polygon(p).scale(&(S::one() / area)))
}

/// `Vol(s) * CC(s)` as a polynomial in the vertex coordinates.
///
/// Component `i` is `det(E_i) / (2 n!)`, where `E` has rows `V_k - V_0` and
/// `E_i` has column `i` replaced by `|V_k|^2 - |V_0|^2`. Defined (and
/// continuous) on degenerate simplices.
pub fn phi_simplex<S: Scalar>(s: &Simplex<S>) -> Point<S> {
    let n = s.dim();
    let rows = s.edge_rows();
    let rhs = s.lifted_differences();
    let denom = S::from_integer(2) * S::factorial(n);
    Point::new(
        (0..n)
            .map(|i| {
                let replaced: Vec<Vec<S>> = rows
                    .iter()
                    .zip(&rhs)
                    .map(|(row, b)| {
                        let mut row = row.clone();
                        row[i] = b.clone();
                        row
                    })
                    .collect();
                linalg::determinant(&replaced) / denom.clone()
            })
            .collect(),
    )
}

/// A weighted center: `point = moment / weight`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CenterResult<S> {
    pub point: Point<S>,
    /// Total signed volume used as the denominator.
    pub weight: S,
}

fn first_dim<S: Scalar>(t: &Triangulation<S>) -> Result<usize, Error> {
    t.simplices()
        .first()
        .map(Simplex::dim)
        .ok_or(Error::ZeroTotalVolume)
}

/// `(sum phi(D_i)) / (sum Vol(D_i))` over the members of `t`.
pub fn ccm_triangulated<S: Scalar>(t: &Triangulation<S>) -> Result<CenterResult<S>, Error> {
    let n = first_dim(t)?;
    let mut moment = Point::origin(n);
    let mut weight = S::zero();
    for s in t.simplices() {
        moment = &moment + &phi_simplex(s);
        weight = weight + signed_volume(s);
    }
    if weight.is_zero() {
        return Err(Error::ZeroTotalVolume);
    }
    Ok(CenterResult {
        point: moment.scale(&(S::one() / weight.clone())),
        weight,
    })
}

/// Volume-weighted average of member centroids.
pub fn cm_triangulated<S: Scalar>(t: &Triangulation<S>) -> Result<CenterResult<S>, Error> {
    let n = first_dim(t)?;
    let mut moment = Point::origin(n);
    let mut weight = S::zero();
    for s in t.simplices() {
        let v = signed_volume(s);
        moment = &moment + &centroid(s).scale(&v);
        weight = weight + v;
    }
    if weight.is_zero() {
        return Err(Error::ZeroTotalVolume);
    }
    Ok(CenterResult {
        point: moment.scale(&(S::one() / weight.clone())),
        weight,
    })
}

/// Boundary-face formula:
/// `CCM_i = 1/(2 n! Vol) * sum_F det A_i(F)`, where `A(F)` has the face
/// vertices as columns and `A_i(F)` replaces row `i` by their squared norms.
pub fn ccm_polytope<S: Scalar>(p: &SimplicialPolytope<S>) -> Result<Point<S>, Error> {
    let n = p.dim();
    let volume = p.volume();
    if volume.is_zero() {
        return Err(Error::ZeroVolume);
    }
    let mut sums = vec![S::zero(); n];
    for face in p.faces() {
        let pts = p.face_points(face);
        let norms: Vec<S> = pts.iter().map(Point::norm_squared).collect();
        for (i, sum) in sums.iter_mut().enumerate() {
            let a_i: Vec<Vec<S>> = (0..n)
                .map(|row| {
                    if row == i {
                        norms.clone()
                    } else {
                        pts.iter().map(|v| v[row].clone()).collect()
                    }
                })
                .collect();
            *sum = sum.clone() + linalg::determinant(&a_i);
        }
    }
    let scale = S::one() / (S::from_integer(2) * S::factorial(n) * volume);
    Ok(Point::new(sums).scale(&scale))
}

/// Center of mass via the fan from the origin.
pub fn cm_polytope<S: Scalar>(p: &SimplicialPolytope<S>) -> Result<Point<S>, Error> {
    cm_polytope_from(p, &Point::origin(p.dim()))
}

/// Center of mass via the fan from `apex`.
pub fn cm_polytope_from<S: Scalar>(
    p: &SimplicialPolytope<S>,
    apex: &Point<S>,
) -> Result<Point<S>, Error> {
    let t = fan_triangulation(p, apex)?;
    cm_triangulated(&t)
        .map(|r| r.point)
        .map_err(|_| Error::ZeroVolume)
}

/// Anything with a center of mass and a circumcenter of mass.
pub trait Body<S: Scalar> {
    fn volume(&self) -> S;
    fn center_of_mass(&self) -> Result<Point<S>, Error>;
    fn circumcenter_of_mass(&self) -> Result<Point<S>, Error>;
}

impl<S: Scalar> Body<S> for Polygon2D<S> {
    fn volume(&self) -> S {
        self.signed_area()
    }

    fn center_of_mass(&self) -> Result<Point<S>, Error> {
        cm_polygon(self)
    }

    fn circumcenter_of_mass(&self) -> Result<Point<S>, Error> {
        ccm_polygon(self)
    }
}

impl<S: Scalar> Body<S> for SimplicialPolytope<S> {
    fn volume(&self) -> S {
        SimplicialPolytope::volume(self)
    }

    fn center_of_mass(&self) -> Result<Point<S>, Error> {
        cm_polytope(self)
    }

    fn circumcenter_of_mass(&self) -> Result<Point<S>, Error> {
        ccm_polytope(self)
    }
}

/// Point `t * CM + (1 - t) * CCM` of the generalized Euler line. `t` is not
/// clamped.
pub fn euler_line_point<S: Scalar, B: Body<S> + ?Sized>(body: &B, t: &S) -> Result<Point<S>, Error> {
    if body.volume().is_zero() {
        return Err(Error::ZeroVolume);
    }
    let cm = body.center_of_mass()?;
    let ccm = body.circumcenter_of_mass()?;
    Ok(Point::affine_mix(t, &cm, &ccm))
}
