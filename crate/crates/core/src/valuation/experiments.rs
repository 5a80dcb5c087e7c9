//! Small exact experiments around the continuity and valuation properties of
//! `phi = Vol * CCM`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::centers::{ccm_polygon, phi_polygon, phi_simplex, Polygon2D};
use crate::exact_serde;
use crate::geometry::{signed_volume, Point, Simplex};
use crate::scalar::{ratio, Rational, Scalar};
use crate::valuation::moment::{moment_polynomial, MomentPolynomial};
use crate::Error;

#[derive(Debug, Clone, Serialize)]
pub struct TrianglePiece {
    pub label: &'static str,
    #[serde(serialize_with = "exact_serde::points")]
    pub vertices: Vec<Point<Rational>>,
    #[serde(serialize_with = "exact_serde::rational")]
    pub signed_area: Rational,
    #[serde(serialize_with = "exact_serde::point")]
    pub phi: Point<Rational>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DegenerateTriangleReport {
    /// `A, B, C, M` with `M` the midpoint of the hypotenuse `AC`.
    #[serde(serialize_with = "exact_serde::points")]
    pub points: Vec<Point<Rational>>,
    #[serde(serialize_with = "exact_serde::rational")]
    pub area: Rational,
    #[serde(serialize_with = "exact_serde::point")]
    pub ccm_abc: Point<Rational>,
    pub pieces: Vec<TrianglePiece>,
    #[serde(serialize_with = "exact_serde::point")]
    pub phi_amc: Point<Rational>,
    /// Sum of `phi` over all three pieces.
    #[serde(serialize_with = "exact_serde::point")]
    pub sum_with_degenerate: Point<Rational>,
    /// Sum of `phi` over the two nondegenerate pieces.
    #[serde(serialize_with = "exact_serde::point")]
    pub sum_without_degenerate: Point<Rational>,
    /// `sum_without / area - CCM(ABC)`.
    #[serde(serialize_with = "exact_serde::point")]
    pub discrepancy: Point<Rational>,
    pub restores_total_sum: bool,
}

/// The isosceles right triangle `A = (-1, 0)`, `B = (0, 1)`, `C = (1, 0)`
/// triangulated by `ABM`, `BCM` and the flat `AMC`, with `M = (0, 0)`.
pub fn degenerate_triangle_demo() -> DegenerateTriangleReport {
    let p = |x: i64, y: i64| Point::<Rational>::from_ints(&[x, y]);
    let (a, b, c, m) = (p(-1, 0), p(0, 1), p(1, 0), p(0, 0));
    let triangle = Polygon2D::new(vec![a.clone(), c.clone(), b.clone()]).expect("three points");
    let area = triangle.signed_area();
    let ccm_abc = ccm_polygon(&triangle).expect("nonzero area");

    // Each piece replaces one vertex of the positively oriented (A, C, B) by M.
    let piece = |label, vs: Vec<Point<Rational>>| {
        let s = Simplex::new(vs.clone()).expect("three points in the plane");
        TrianglePiece {
            label,
            vertices: vs,
            signed_area: signed_volume(&s),
            phi: phi_simplex(&s),
        }
    };
    let pieces = vec![
        piece("BCM", vec![m.clone(), c.clone(), b.clone()]),
        piece("ABM", vec![a.clone(), m.clone(), b.clone()]),
        piece("AMC", vec![a.clone(), c.clone(), m.clone()]),
    ];
    let sum = |ps: &[TrianglePiece]| ps.iter().fold(Point::origin(2), |acc, t| &acc + &t.phi);
    let sum_with_degenerate = sum(&pieces);
    let sum_without_degenerate = sum(&pieces[..2]);
    let discrepancy = &sum_without_degenerate.scale(&(Rational::one() / &area)) - &ccm_abc;
    let restores_total_sum = sum_with_degenerate.scale(&(Rational::one() / &area)) == ccm_abc;
    DegenerateTriangleReport {
        points: vec![a, b, c, m],
        area,
        ccm_abc,
        phi_amc: pieces[2].phi.clone(),
        pieces,
        sum_with_degenerate,
        sum_without_degenerate,
        discrepancy,
        restores_total_sum,
    }
}

/// The isosceles triangle `(-1, 0), (1, 0), (0, h)` with base angle
/// `alpha = atan h`.
pub fn k_alpha<S: Scalar>(h: &S) -> Result<Polygon2D<S>, Error> {
    if *h <= S::zero() {
        return Err(Error::NonpositiveHeight);
    }
    Polygon2D::new(vec![
        Point::new(vec![-S::one(), S::zero()]),
        Point::new(vec![S::one(), S::zero()]),
        Point::new(vec![S::zero(), h.clone()]),
    ])
}

/// `Vol * CCM` of the isosceles triangle of height `h`; equals
/// `(0, (h^2 - 1) / 2)`.
pub fn k_alpha_phi<S: Scalar>(h: &S) -> Result<Point<S>, Error> {
    Ok(phi_polygon(&k_alpha(h)?))
}

#[derive(Debug, Clone, Serialize)]
pub struct NotValuationRow {
    #[serde(serialize_with = "exact_serde::rational")]
    pub h: Rational,
    #[serde(serialize_with = "exact_serde::point")]
    pub phi: Point<Rational>,
    pub phi_norm: f64,
    /// `|phi - (0, -1/2)|`.
    pub distance_to_limit: f64,
    pub coefficient_norms: Vec<f64>,
    pub max_coefficient_norm: f64,
    pub moment: MomentPolynomial,
}

#[derive(Debug, Clone, Serialize)]
pub struct NotValuationReport {
    pub threshold: f64,
    pub phi_floor: f64,
    pub rows: Vec<NotValuationRow>,
    /// Set when some row has every moment coefficient below `threshold` while
    /// `|phi|` stays at least `phi_floor`.
    #[serde(rename = "phi_not_in_Vn")]
    pub phi_not_in_vn: bool,
}

pub const DEFAULT_COEFFICIENT_THRESHOLD: f64 = 1e-3;
pub const PHI_FLOOR: f64 = 0.25;

/// Contrasts the moment coefficients of the thin triangles `K(h)`, which tend
/// to zero, with `phi(K(h))`, which tends to `(0, -1/2)`. Any map in the span
/// of the moment coefficients would have to tend to zero as well.
pub fn not_valuation_demo(h_values: &[Rational], threshold: f64) -> Result<NotValuationReport, Error> {
    let limit = Point::new(vec![Rational::zero(), ratio(-1, 2)]);
    let mut rows = Vec::with_capacity(h_values.len());
    for h in h_values {
        let k = k_alpha(h)?;
        let phi = phi_polygon(&k);
        let moment = moment_polynomial(&k)?;
        let coefficient_norms = moment.coefficient_norms();
        let max_coefficient_norm = coefficient_norms.iter().copied().fold(0.0, f64::max);
        rows.push(NotValuationRow {
            h: h.clone(),
            phi_norm: phi.to_f64().distance_f64(&Point::origin(2)),
            distance_to_limit: phi.to_f64().distance_f64(&limit.to_f64()),
            phi,
            coefficient_norms,
            max_coefficient_norm,
            moment,
        });
    }
    let phi_not_in_vn = rows
        .iter()
        .any(|r| r.max_coefficient_norm < threshold && r.phi_norm >= PHI_FLOOR);
    Ok(NotValuationReport {
        threshold,
        phi_floor: PHI_FLOOR,
        rows,
        phi_not_in_vn,
    })
}
