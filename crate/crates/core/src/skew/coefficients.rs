//! Coefficient tensors `A^l_{i,jk}` of candidate centers in the `X` basis.
//!
//! A center map `C` with polynomial `Vol * C` is determined by
//! `y_l = sum_{i,j,k} A^l_{i,jk} X_{i,jk}` (summing over ordered `j, k`) and
//! `C = y / V`. The tensor is symmetric in `j, k`; storage keeps one entry per
//! unordered pair, ordered lexicographically in `(l, i, min(j,k), max(j,k))`.

use serde::Serialize;

use crate::geometry::{Point, Simplex};
use crate::scalar::Scalar;
use crate::skew::determinants::{eval_v, eval_x};
use crate::Error;

/// Key of one unknown: component `l`, replaced row `i`, unordered pair `{j, k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CoefficientKey {
    pub l: usize,
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl CoefficientKey {
    pub fn new(l: usize, i: usize, j: usize, k: usize) -> Self {
        Self {
            l,
            i,
            j: j.min(k),
            k: j.max(k),
        }
    }

    /// One-based label such as `A^1_{2,12}`.
    pub fn label(&self) -> String {
        format!("A^{}_{{{},{}{}}}", self.l + 1, self.i + 1, self.j + 1, self.k + 1)
    }
}

/// Number of unordered pairs `{j, k}` from `n` indices.
pub fn pair_count(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Number of basis determinants `X_{i,jk}`: `n^2 (n+1) / 2`.
pub fn basis_size(n: usize) -> usize {
    n * pair_count(n)
}

/// Number of unknowns `A^l_{i,jk}`: `n` times the basis size.
pub fn unknown_count(n: usize) -> usize {
    n * basis_size(n)
}

fn pair_index(n: usize, j: usize, k: usize) -> usize {
    let (a, b) = (j.min(k), j.max(k));
    a * n - a * a.saturating_sub(1) / 2 + (b - a)
}

/// Column of `key` in the lexicographic unknown ordering.
pub fn column_of(n: usize, key: CoefficientKey) -> usize {
    (key.l * n + key.i) * pair_count(n) + pair_index(n, key.j, key.k)
}

/// All keys in column order.
pub fn keys(n: usize) -> Vec<CoefficientKey> {
    let mut out = Vec::with_capacity(unknown_count(n));
    for l in 0..n {
        for i in 0..n {
            for j in 0..n {
                for k in j..n {
                    out.push(CoefficientKey { l, i, j, k });
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct CenterCoefficients<S> {
    n: usize,
    values: Vec<S>,
}

impl<S: Scalar> CenterCoefficients<S> {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            values: vec![S::zero(); unknown_count(n)],
        }
    }

    /// Wraps a solution vector in column order.
    pub fn from_vec(n: usize, values: Vec<S>) -> Result<Self, Error> {
        if values.len() != unknown_count(n) {
            return Err(Error::DimensionMismatch {
                expected: unknown_count(n),
                found: values.len(),
            });
        }
        Ok(Self { n, values })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[S] {
        &self.values
    }

    pub fn get(&self, l: usize, i: usize, j: usize, k: usize) -> &S {
        &self.values[column_of(self.n, CoefficientKey::new(l, i, j, k))]
    }

    pub fn set(&mut self, l: usize, i: usize, j: usize, k: usize, value: S) {
        let col = column_of(self.n, CoefficientKey::new(l, i, j, k));
        self.values[col] = value;
    }

    /// `t * a + (1 - t) * b`
    pub fn affine_mix(t: &S, a: &Self, b: &Self) -> Self {
        let s = S::one() - t.clone();
        Self {
            n: a.n,
            values: a
                .values
                .iter()
                .zip(&b.values)
                .map(|(x, y)| t.clone() * x.clone() + s.clone() * y.clone())
                .collect(),
        }
    }

    pub fn sum(&self, other: &Self) -> Self {
        Self {
            n: self.n,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        Self {
            n: self.n,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

fn kronecker<S: Scalar>(a: usize, b: usize) -> S {
    if a == b {
        S::one()
    } else {
        S::zero()
    }
}

/// Center of mass: `A^l_{i,jk} = (d_ij d_lk + d_ik d_lj) / (2(n+1))`.
pub fn cm_coefficients<S: Scalar>(n: usize) -> CenterCoefficients<S> {
    let mut c = CenterCoefficients::zeros(n);
    let scale = S::one() / S::from_integer(2 * (n as i64 + 1));
    for key in keys(n) {
        let CoefficientKey { l, i, j, k } = key;
        let v = kronecker::<S>(i, j) * kronecker(l, k) + kronecker::<S>(i, k) * kronecker(l, j);
        c.set(l, i, j, k, v * scale.clone());
    }
    c
}

/// Circumcenter: `A^l_{i,jk} = d_il d_jk / 2`.
pub fn ccm_coefficients<S: Scalar>(n: usize) -> CenterCoefficients<S> {
    let mut c = CenterCoefficients::zeros(n);
    let half = S::one() / S::from_integer(2);
    for key in keys(n) {
        let CoefficientKey { l, i, j, k } = key;
        c.set(l, i, j, k, kronecker::<S>(i, l) * kronecker(j, k) * half.clone());
    }
    c
}

/// `y = sum A^l_{i,jk} X_{i,jk}` over ordered `j, k`; this is `Vol * C * n!`.
pub fn evaluate_moment<S: Scalar>(coeffs: &CenterCoefficients<S>, s: &Simplex<S>) -> Result<Point<S>, Error> {
    let n = coeffs.dim();
    if s.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: s.dim(),
        });
    }
    let two = S::from_integer(2);
    let mut y = vec![S::zero(); n];
    for i in 0..n {
        for j in 0..n {
            for k in j..n {
                let x = eval_x(s, i, j, k)?;
                if x.is_zero() {
                    continue;
                }
                let weight = if j == k { x } else { x * two.clone() };
                for (l, yl) in y.iter_mut().enumerate() {
                    let a = coeffs.get(l, i, j, k);
                    if !a.is_zero() {
                        *yl = yl.clone() + a.clone() * weight.clone();
                    }
                }
            }
        }
    }
    Ok(Point::new(y))
}

/// `C(s) = y / V`.
pub fn evaluate_center<S: Scalar>(coeffs: &CenterCoefficients<S>, s: &Simplex<S>) -> Result<Point<S>, Error> {
    let v = eval_v(s);
    if v.is_zero() {
        return Err(Error::DegenerateSimplex);
    }
    Ok(evaluate_moment(coeffs, s)?.scale(&(S::one() / v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio, Rational};

    type Q = Rational;

    #[test]
    fn counts() {
        assert_eq!(basis_size(2), 6);
        assert_eq!(basis_size(3), 18);
        assert_eq!(unknown_count(2), 12);
        assert_eq!(unknown_count(4), 160);
    }

    #[test]
    fn column_order_is_lexicographic() {
        for n in 1..=4 {
            let ks = keys(n);
            assert_eq!(ks.len(), unknown_count(n));
            for (col, key) in ks.iter().enumerate() {
                assert_eq!(column_of(n, *key), col);
                assert_eq!(column_of(n, CoefficientKey::new(key.l, key.i, key.k, key.j)), col);
            }
            assert!(ks.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn known_tensors_in_the_plane() {
        let cm = cm_coefficients::<Q>(2);
        assert_eq!(cm.get(0, 0, 0, 0), &ratio(1, 3));
        assert_eq!(cm.get(0, 1, 0, 1), &ratio(1, 6));
        assert_eq!(cm.get(0, 1, 1, 1), &int(0));
        let ccm = ccm_coefficients::<Q>(2);
        assert_eq!(ccm.get(0, 0, 0, 0), &ratio(1, 2));
        assert_eq!(ccm.get(0, 0, 1, 1), &ratio(1, 2));
        for (j, k) in [(0, 0), (0, 1), (1, 1)] {
            assert_eq!(ccm.get(1, 0, j, k), &int(0));
        }
        assert_eq!(CoefficientKey::new(0, 1, 1, 0).label(), "A^1_{2,12}");
    }

    #[test]
    fn evaluates_to_known_centers() {
        let s = Simplex::<Q>::from_ints(&[&[0, 0], &[3, 0], &[0, 3]]).unwrap();
        assert_eq!(evaluate_center(&cm_coefficients(2), &s).unwrap(), Point::from_ints(&[1, 1]));
        let s = Simplex::<Q>::from_ints(&[&[-1, 0], &[1, 0], &[0, 1]]).unwrap();
        assert_eq!(evaluate_center(&ccm_coefficients(2), &s).unwrap(), Point::from_ints(&[0, 0]));
        let flat = Simplex::<Q>::from_ints(&[&[-1, 0], &[0, 0], &[1, 0]]).unwrap();
        assert_eq!(evaluate_center(&cm_coefficients(2), &flat), Err(Error::DegenerateSimplex));
    }
}
