use std::ops::{Add, Sub};

use serde::Serialize;

use crate::scalar::Scalar;

/// A point (or vector) in `R^n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Point<S> {
    coords: Vec<S>,
}

impl<S: Scalar> Point<S> {
    pub fn new(coords: Vec<S>) -> Self {
        Self { coords }
    }

    pub fn origin(dim: usize) -> Self {
        Self::new(vec![S::zero(); dim])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| S::from_integer(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<S> {
        self.coords
    }

    pub fn scale(&self, factor: &S) -> Self {
        Self::new(self.coords.iter().map(|c| c.clone() * factor.clone()).collect())
    }

    pub fn dot(&self, other: &Self) -> S {
        self.coords
            .iter()
            .zip(&other.coords)
            .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    pub fn norm_squared(&self) -> S {
        self.dot(self)
    }

    /// Componentwise comparison through [`Scalar::close_to`].
    pub fn close_to(&self, other: &Self, tol: f64) -> bool {
        self.dim() == other.dim()
            && self
                .coords
                .iter()
                .zip(&other.coords)
                .all(|(a, b)| a.close_to(b, tol))
    }

    pub fn to_f64(&self) -> Point<f64> {
        Point::new(self.coords.iter().map(Scalar::to_f64).collect())
    }

    /// Euclidean distance computed in floating point.
    pub fn distance_f64(&self, other: &Self) -> f64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a.to_f64() - b.to_f64()).powi(2))
            .sum::<f64>()
            .sqrt()
    }

    /// `t * a + (1 - t) * b`
    pub fn affine_mix(t: &S, a: &Self, b: &Self) -> Self {
        let s = S::one() - t.clone();
        Self::new(
            a.coords
                .iter()
                .zip(&b.coords)
                .map(|(x, y)| t.clone() * x.clone() + s.clone() * y.clone())
                .collect(),
        )
    }
}

impl<S: Scalar> Add for &Point<S> {
    type Output = Point<S>;

    fn add(self, rhs: Self) -> Point<S> {
        debug_assert_eq!(self.dim(), rhs.dim());
        Point::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }
}

impl<S: Scalar> Sub for &Point<S> {
    type Output = Point<S>;

    fn sub(self, rhs: Self) -> Point<S> {
        debug_assert_eq!(self.dim(), rhs.dim());
        Point::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }
}

impl<S> std::ops::Index<usize> for Point<S> {
    type Output = S;

    fn index(&self, index: usize) -> &S {
        &self.coords[index]
    }
}
