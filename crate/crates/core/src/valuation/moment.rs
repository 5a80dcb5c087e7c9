//! Moment vector of the parallel body `K_eps = K + eps B` of a convex polygon.
//!
//! `int_{K_eps} x dx` splits into the polygon itself, one rectangle per edge
//! and one circular sector per vertex. With `d` an edge from `a` to `b`,
//! `n = (d_y, -d_x)` its outward normal (unnormalized, length `|d|`) and
//! `theta` the exterior angle at a vertex `v`:
//!
//! * edge strip: `eps |d| (a + b) / 2 + eps^2 n / 2`
//! * vertex sector: `eps^2 theta v / 2 + eps^3 / 3 * (J u_prev - J u_next)`
//!   where `u` are the unit normals and `J(x, y) = (-y, x)`.
//!
//! Edge lengths are square roots and exterior angles are differences of polar
//! angles, both kept symbolic.

use serde::Serialize;

use num_traits::{One, Zero};

use crate::centers::Polygon2D;
use crate::geometry::Point;
use crate::scalar::{ratio, Rational};
use crate::valuation::symbolic::ExactReal;
use crate::Error;

pub type ExactVector = [ExactReal; 2];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MomentPolynomial {
    /// Coefficients of `eps^0 .. eps^3`.
    coefficients: Vec<ExactVector>,
    /// `area(K_eps) = area[0] + area[1] eps + area[2] eps^2`.
    area: Vec<ExactReal>,
    perimeter: ExactReal,
}

fn cross(a: &Point<Rational>, b: &Point<Rational>) -> Rational {
    &a[0] * &b[1] - &a[1] * &b[0]
}

/// Strict left turn at every vertex and total turning `2 pi`.
fn check_convex(v: &[Point<Rational>]) -> Result<(), Error> {
    let m = v.len();
    for i in 0..m {
        let prev = &v[i] - &v[(i + m - 1) % m];
        let next = &v[(i + 1) % m] - &v[i];
        if cross(&prev, &next) <= Rational::zero() {
            return Err(Error::NotConvex(i));
        }
    }
    Ok(())
}

fn upper_half(w: &Point<Rational>) -> bool {
    w[1] > Rational::zero() || (w[1].is_zero() && w[0] > Rational::zero())
}

/// Whether the polar angle of `a` is smaller than that of `b`, exactly.
fn angle_less(a: &Point<Rational>, b: &Point<Rational>) -> bool {
    match (upper_half(a), upper_half(b)) {
        (true, false) => true,
        (false, true) => false,
        _ => cross(a, b) > Rational::zero(),
    }
}

fn outward_normal(d: &Point<Rational>) -> Point<Rational> {
    Point::new(vec![d[1].clone(), -d[0].clone()])
}

fn exact_vector(p: &Point<Rational>) -> ExactVector {
    [ExactReal::rational(p[0].clone()), ExactReal::rational(p[1].clone())]
}

fn add_vec(a: &ExactVector, b: &ExactVector) -> ExactVector {
    [&a[0] + &b[0], &a[1] + &b[1]]
}

fn scale_vec(a: &ExactVector, q: &Rational) -> ExactVector {
    [a[0].scale(q), a[1].scale(q)]
}

fn zero_vec() -> ExactVector {
    [ExactReal::zero(), ExactReal::zero()]
}

/// Exact moment polynomial of a strictly convex polygon. Clockwise input is
/// reoriented first.
pub fn moment_polynomial(p: &Polygon2D<Rational>) -> Result<MomentPolynomial, Error> {
    let p = if p.signed_area() < Rational::zero() {
        p.reversed()
    } else {
        p.clone()
    };
    let v = p.vertices();
    let m = v.len();
    check_convex(v)?;

    let edges: Vec<Point<Rational>> = (0..m).map(|i| &v[(i + 1) % m] - &v[i]).collect();
    let lengths: Vec<ExactReal> = edges.iter().map(|d| ExactReal::sqrt(&d.norm_squared())).collect();
    let inverse_lengths: Vec<ExactReal> = edges
        .iter()
        .map(|d| ExactReal::sqrt(&(Rational::one() / d.norm_squared())))
        .collect();
    let normals: Vec<Point<Rational>> = edges.iter().map(outward_normal).collect();
    let angles: Vec<ExactReal> = normals.iter().map(|n| ExactReal::angle_of(&n[0], &n[1])).collect();

    let mut c0 = Point::origin(2);
    let mut twice_area = Rational::zero();
    for i in 0..m {
        let (a, b) = (&v[i], &v[(i + 1) % m]);
        let w = cross(a, b);
        c0 = &c0 + &(a + b).scale(&(&w / Rational::from_integer(6.into())));
        twice_area += w;
    }
    let area = twice_area / Rational::from_integer(2.into());

    let half = ratio(1, 2);
    let mut c1 = zero_vec();
    let mut c2 = zero_vec();
    let mut c3 = zero_vec();
    let mut perimeter = ExactReal::zero();
    let mut sector_area = ExactReal::zero();
    let mut wraps = 0;
    for i in 0..m {
        let (a, b) = (&v[i], &v[(i + 1) % m]);
        let mid = (a + b).scale(&half);
        c1 = add_vec(&c1, &[lengths[i].scale(&mid[0]), lengths[i].scale(&mid[1])]);
        c2 = add_vec(&c2, &scale_vec(&exact_vector(&normals[i]), &half));
        perimeter = &perimeter + &lengths[i];

        let prev = (i + m - 1) % m;
        let mut theta = &angles[i] - &angles[prev];
        if angle_less(&normals[i], &normals[prev]) {
            theta = theta + ExactReal::pi().scale(&Rational::from_integer(2.into()));
            wraps += 1;
        }
        let vertex = &v[i];
        c2 = add_vec(&c2, &[theta.scale(&(&vertex[0] * &half)), theta.scale(&(&vertex[1] * &half))]);
        sector_area = &sector_area + &theta.scale(&half);

        // J u_prev - J u_next with J(x, y) = (-y, x).
        let third = ratio(1, 3);
        let (up, un) = (&normals[prev], &normals[i]);
        let jx = &inverse_lengths[i].scale(&un[1]) - &inverse_lengths[prev].scale(&up[1]);
        let jy = &inverse_lengths[prev].scale(&up[0]) - &inverse_lengths[i].scale(&un[0]);
        c3 = add_vec(&c3, &[jx.scale(&third), jy.scale(&third)]);
    }
    if wraps != 1 {
        return Err(Error::NotConvex(0));
    }

    Ok(MomentPolynomial {
        coefficients: vec![exact_vector(&c0), c1, c2, c3],
        area: vec![ExactReal::rational(area), perimeter.clone(), sector_area],
        perimeter,
    })
}

impl MomentPolynomial {
    pub fn coefficients(&self) -> &[ExactVector] {
        &self.coefficients
    }

    pub fn coefficient(&self, power: usize) -> &ExactVector {
        &self.coefficients[power]
    }

    pub fn area_polynomial(&self) -> &[ExactReal] {
        &self.area
    }

    pub fn perimeter(&self) -> &ExactReal {
        &self.perimeter
    }

    /// Highest power with a nonzero coefficient.
    pub fn degree(&self) -> usize {
        self.coefficients
            .iter()
            .rposition(|c| !(c[0].is_zero() && c[1].is_zero()))
            .unwrap_or(0)
    }

    pub fn evaluate(&self, eps: &Rational) -> ExactVector {
        let mut power = Rational::one();
        let mut out = zero_vec();
        for c in &self.coefficients {
            out = add_vec(&out, &scale_vec(c, &power));
            power *= eps;
        }
        out
    }

    pub fn evaluate_f64(&self, eps: f64) -> [f64; 2] {
        let mut out = [0.0; 2];
        for (k, c) in self.coefficients.iter().enumerate() {
            let e = eps.powi(k as i32);
            out[0] += c[0].to_f64() * e;
            out[1] += c[1].to_f64() * e;
        }
        out
    }

    /// Euclidean norm of each coefficient vector.
    pub fn coefficient_norms(&self) -> Vec<f64> {
        self.coefficients
            .iter()
            .map(|c| c[0].to_f64().hypot(c[1].to_f64()))
            .collect()
    }

    /// `area(K_eps) = A + L eps + pi eps^2` with `L` the perimeter, exactly.
    pub fn steiner_holds(&self) -> bool {
        self.area[1] == self.perimeter && self.area[2] == ExactReal::pi()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centers::cm_polygon;
    use crate::scalar::int;

    fn square() -> Polygon2D<Rational> {
        Polygon2D::from_ints(&[[0, 0], [1, 0], [1, 1], [0, 1]]).unwrap()
    }

    #[test]
    fn unit_square_coefficients() {
        let mp = moment_polynomial(&square()).unwrap();
        let r = |q: Rational| ExactReal::rational(q);
        let pi_half = ExactReal::pi().scale(&ratio(1, 2));
        assert_eq!(mp.coefficient(0), &[r(ratio(1, 2)), r(ratio(1, 2))]);
        assert_eq!(mp.coefficient(1), &[r(int(2)), r(int(2))]);
        assert_eq!(mp.coefficient(2), &[pi_half.clone(), pi_half]);
        assert_eq!(mp.coefficient(3), &zero_vec());
        assert_eq!(mp.degree(), 2);
        assert!(mp.steiner_holds());
        assert_eq!(mp.perimeter(), &r(int(4)));
    }

    #[test]
    fn free_term_is_area_times_centroid() {
        let p = Polygon2D::from_ints(&[[0, 0], [5, 1], [6, 4], [2, 6], [-1, 3]]).unwrap();
        let mp = moment_polynomial(&p).unwrap();
        let expected = cm_polygon(&p).unwrap().scale(&p.signed_area());
        assert_eq!(mp.coefficient(0), &exact_vector(&expected));
        assert!(mp.steiner_holds());
        assert!(mp.coefficient(3)[0].is_zero() && mp.coefficient(3)[1].is_zero());
    }

    #[test]
    fn clockwise_input_is_accepted() {
        let a = moment_polynomial(&square()).unwrap();
        let b = moment_polynomial(&square().reversed()).unwrap();
        assert_eq!(a.evaluate(&ratio(1, 3)), b.evaluate(&ratio(1, 3)));
    }

    #[test]
    fn rejects_nonconvex_and_collinear() {
        let dart = Polygon2D::from_ints(&[[0, 0], [4, 0], [1, 1], [0, 4]]).unwrap();
        assert!(matches!(moment_polynomial(&dart), Err(Error::NotConvex(_))));
        let flat = Polygon2D::from_ints(&[[0, 0], [1, 0], [2, 0], [0, 2]]).unwrap();
        assert!(matches!(moment_polynomial(&flat), Err(Error::NotConvex(1))));
        let star: Vec<[i64; 2]> = vec![[10, 0], [-8, 6], [3, -10], [3, 10], [-8, -6]];
        assert!(matches!(
            moment_polynomial(&Polygon2D::from_ints(&star).unwrap()),
            Err(Error::NotConvex(_))
        ));
    }
}
