//! Circumcenter of mass of inscribed polygons of a smooth star-shaped curve.
//!
//! As the sampling refines, the circumcenter of mass of the inscribed polygon
//! approaches the center of mass of the lamina it bounds. Float backend only.

use serde::Serialize;

use crate::centers::{ccm_triangulated, cm_polygon, Polygon2D};
use crate::geometry::{Point, Simplex, Triangulation};
use crate::Error;

pub const MIN_SAMPLES: usize = 16;

/// Closed curve given by its samples, star-shaped about `base` (assumed).
#[derive(Debug, Clone, PartialEq)]
pub struct StarCurve {
    samples: Vec<Point<f64>>,
    base: Point<f64>,
}

impl StarCurve {
    pub fn from_samples(samples: Vec<Point<f64>>, base: Point<f64>) -> Result<Self, Error> {
        if samples.len() < MIN_SAMPLES {
            return Err(Error::InvalidParameter(format!(
                "need at least {MIN_SAMPLES} samples, got {}",
                samples.len()
            )));
        }
        if let Some(bad) = samples.iter().chain([&base]).find(|p| p.dim() != 2) {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: bad.dim(),
            });
        }
        Ok(Self { samples, base })
    }

    /// Ellipse with semi-axes `a, b` about `center`, sampled at
    /// `t = u + warp * sin(u)` for `n` equally spaced `u`. A nonzero warp
    /// breaks the central symmetry of the inscribed polygon.
    pub fn ellipse(center: [f64; 2], a: f64, b: f64, n: usize, warp: f64) -> Result<Self, Error> {
        if !(a > 0.0 && b > 0.0) {
            return Err(Error::InvalidParameter("semi-axes must be positive".into()));
        }
        if !(0.0..1.0).contains(&warp.abs()) {
            return Err(Error::InvalidParameter("warp must lie in (-1, 1)".into()));
        }
        let samples = (0..n)
            .map(|k| {
                let u = std::f64::consts::TAU * k as f64 / n as f64;
                let t = u + warp * u.sin();
                Point::new(vec![center[0] + a * t.cos(), center[1] + b * t.sin()])
            })
            .collect();
        Self::from_samples(samples, Point::new(center.to_vec()))
    }

    pub fn circle(center: [f64; 2], radius: f64, n: usize) -> Result<Self, Error> {
        Self::ellipse(center, radius, radius, n, 0.0)
    }

    pub fn samples(&self) -> &[Point<f64>] {
        &self.samples
    }

    pub fn base(&self) -> &Point<f64> {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Fan of triangles `(O, g_k, g_{k+1})`.
    pub fn fan(&self) -> Triangulation<f64> {
        let n = self.samples.len();
        Triangulation::new(
            (0..n)
                .map(|k| {
                    Simplex::new(vec![
                        self.base.clone(),
                        self.samples[k].clone(),
                        self.samples[(k + 1) % n].clone(),
                    ])
                    .expect("planar triangle")
                })
                .collect(),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LimitResult {
    pub samples: usize,
    pub ccm_n: Point<f64>,
    /// Center of mass of the inscribed polygon.
    pub cm_lamina: Point<f64>,
    pub gap: f64,
}

pub fn continuous_limit(curve: &StarCurve) -> Result<LimitResult, Error> {
    let ccm = ccm_triangulated(&curve.fan())?.point;
    let polygon = Polygon2D::new(curve.samples.clone())?;
    let cm = cm_polygon(&polygon).map_err(|_| Error::ZeroTotalVolume)?;
    Ok(LimitResult {
        samples: curve.len(),
        gap: ccm.distance_f64(&cm),
        ccm_n: ccm,
        cm_lamina: cm,
    })
}
