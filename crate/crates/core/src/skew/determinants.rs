//! The bordered determinants `V` and `X_{i,jk}` and their exact identities.
//!
//! The bordering row of ones is placed first, so `V = n! * signed_volume`.
//! Placing it last multiplies every determinant by `(-1)^n`; all identities
//! checked here are homogeneous in `V` and `X`, so they are unaffected.
//!
//! Coordinate indices are zero-based.

use crate::geometry::{Point, Simplex};
use crate::linalg;
use crate::scalar::Scalar;
use crate::Error;

/// Columns `x^0, ..., x^n` of the determinants: the vertices of a simplex.
pub type Configuration<S> = Simplex<S>;

fn coordinate_row<S: Scalar>(c: &Configuration<S>, axis: usize) -> Vec<S> {
    c.vertices().iter().map(|v| v[axis].clone()).collect()
}

fn product_row<S: Scalar>(c: &Configuration<S>, j: usize, k: usize) -> Vec<S> {
    c.vertices()
        .iter()
        .map(|v| v[j].clone() * v[k].clone())
        .collect()
}

fn check_index(index: usize, dim: usize) -> Result<(), Error> {
    if index >= dim {
        Err(Error::IndexOutOfRange { index, dim })
    } else {
        Ok(())
    }
}

/// Bordered matrix: a row of ones followed by coordinate rows, with row `i`
/// (if any) replaced by the products `x_j x_k`.
fn bordered<S: Scalar>(c: &Configuration<S>, replaced: Option<(usize, usize, usize)>) -> Vec<Vec<S>> {
    let n = c.dim();
    let mut rows = Vec::with_capacity(n + 1);
    rows.push(vec![S::one(); n + 1]);
    for axis in 0..n {
        rows.push(match replaced {
            Some((i, j, k)) if i == axis => product_row(c, j, k),
            _ => coordinate_row(c, axis),
        });
    }
    rows
}

/// Sum over rows of the determinant with that row replaced by its derivative.
fn derivative_of_determinant<S: Scalar>(m: &[Vec<S>], dm: &[Vec<S>]) -> S {
    (0..m.len())
        .filter(|&r| dm[r].iter().any(|v| !v.is_zero()))
        .fold(S::zero(), |acc, r| {
            let mut replaced = m.to_vec();
            replaced[r] = dm[r].clone();
            acc + linalg::determinant(&replaced)
        })
}

pub fn eval_v<S: Scalar>(c: &Configuration<S>) -> S {
    linalg::determinant(&bordered(c, None))
}

/// `X_{i,jk}`: the bordered determinant with coordinate row `i` replaced by
/// the entrywise products of rows `j` and `k`.
pub fn eval_x<S: Scalar>(c: &Configuration<S>, i: usize, j: usize, k: usize) -> Result<S, Error> {
    let n = c.dim();
    for index in [i, j, k] {
        check_index(index, n)?;
    }
    Ok(linalg::determinant(&bordered(c, Some((i, j, k)))))
}

/// `X(D) - sum_m X(D_m)`, where `D_m` replaces vertex `m` of `D` by `o`.
/// Vanishes identically.
pub fn subdivision_check<S: Scalar>(
    c: &Configuration<S>,
    o: &Point<S>,
    i: usize,
    j: usize,
    k: usize,
) -> Result<S, Error> {
    if o.dim() != c.dim() {
        return Err(Error::DimensionMismatch {
            expected: c.dim(),
            found: o.dim(),
        });
    }
    let whole = eval_x(c, i, j, k)?;
    (0..=c.dim()).try_fold(whole, |acc, m| {
        Ok(acc - eval_x(&c.with_vertex(m, o.clone()), i, j, k)?)
    })
}

/// Exact derivative of `X_{i,jk}` when every vertex moves with unit speed
/// along axis `r`. Equals `(d_ij d_rk + d_ik d_rj) V`.
pub fn translation_action<S: Scalar>(
    c: &Configuration<S>,
    r: usize,
    i: usize,
    j: usize,
    k: usize,
) -> Result<S, Error> {
    let n = c.dim();
    check_index(r, n)?;
    let m = bordered(c, Some((i, j, k)));
    let delta = |a: usize, b: usize| if a == b { S::one() } else { S::zero() };
    let mut dm = vec![vec![S::zero(); n + 1]];
    for axis in 0..n {
        dm.push(if axis == i {
            c.vertices()
                .iter()
                .map(|v| delta(j, r) * v[k].clone() + delta(k, r) * v[j].clone())
                .collect()
        } else {
            vec![delta(axis, r); n + 1]
        });
    }
    Ok(derivative_of_determinant(&m, &dm))
}

/// Exact derivative of `X_{i,jk}` under the infinitesimal rotation of the
/// `(p, q)` plane with `dx_q = x_p`, `dx_p = -x_q` at every vertex.
pub fn rotation_derivative<S: Scalar>(
    c: &Configuration<S>,
    p: usize,
    q: usize,
    i: usize,
    j: usize,
    k: usize,
) -> Result<S, Error> {
    let n = c.dim();
    check_index(p, n)?;
    check_index(q, n)?;
    if p == q {
        return Err(Error::BadPlane(p));
    }
    let m = bordered(c, Some((i, j, k)));
    let velocity = |v: &Point<S>, axis: usize| {
        if axis == q {
            v[p].clone()
        } else if axis == p {
            -v[q].clone()
        } else {
            S::zero()
        }
    };
    let mut dm = vec![vec![S::zero(); n + 1]];
    for axis in 0..n {
        dm.push(
            c.vertices()
                .iter()
                .map(|v| {
                    if axis == i {
                        velocity(v, j) * v[k].clone() + v[j].clone() * velocity(v, k)
                    } else {
                        velocity(v, axis)
                    }
                })
                .collect(),
        );
    }
    Ok(derivative_of_determinant(&m, &dm))
}

/// The closed form of the rotation derivative as a combination of
/// `X` determinants (six Kronecker-delta terms).
pub fn rotation_closed_form<S: Scalar>(
    c: &Configuration<S>,
    p: usize,
    q: usize,
    i: usize,
    j: usize,
    k: usize,
) -> Result<S, Error> {
    let mut total = S::zero();
    if q == j {
        total = total + eval_x(c, i, p, k)?;
    }
    if q == k {
        total = total + eval_x(c, i, p, j)?;
    }
    if p == i {
        total = total - eval_x(c, q, j, k)?;
    }
    if p == j {
        total = total - eval_x(c, i, q, k)?;
    }
    if p == k {
        total = total - eval_x(c, i, q, j)?;
    }
    if q == i {
        total = total + eval_x(c, p, j, k)?;
    }
    Ok(total)
}

/// Rotation derivative minus its closed form. Vanishes identically.
pub fn rotation_action<S: Scalar>(
    c: &Configuration<S>,
    p: usize,
    q: usize,
    i: usize,
    j: usize,
    k: usize,
) -> Result<S, Error> {
    Ok(rotation_derivative(c, p, q, i, j, k)? - rotation_closed_form(c, p, q, i, j, k)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::signed_volume;
    use crate::scalar::{int, Rational};

    type Q = Rational;

    fn config(v: &[&[i64]]) -> Configuration<Q> {
        Simplex::from_ints(v).unwrap()
    }

    #[test]
    fn v_of_standard_simplex() {
        assert_eq!(eval_v(&config(&[&[0, 0], &[1, 0], &[0, 1]])), int(1));
        assert_eq!(eval_v(&config(&[&[3, 1], &[3, 1], &[0, 1]])), int(0));
        let tet = config(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(eval_v(&tet), int(1));
        assert_eq!(eval_v(&tet), signed_volume(&tet) * Q::factorial(3));
    }

    #[test]
    fn x_against_cofactor_expansion() {
        // n = 2, i = j = k = 0 with row 0 a 0/1 indicator (x-coordinates 0,1,0):
        // products equal the row itself, so X_{0,00} = V = 1.
        let c = config(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(eval_x(&c, 0, 0, 0).unwrap(), int(1));
        // X_{1,00}: rows [1,1,1], [0,1,0], [0,1,0] -> 0 by repeated row.
        assert_eq!(eval_x(&c, 1, 0, 0).unwrap(), int(0));
        // X_{0,11} on (1,2),(3,5),(-1,4): rows [1,1,1],[4,25,16],[2,5,4].
        // Cofactor expansion along the first row:
        // (25*4-16*5) - (4*4-16*2) + (4*5-25*2) = 20 + 16 - 30 = 6
        let c = config(&[&[1, 2], &[3, 5], &[-1, 4]]);
        assert_eq!(eval_x(&c, 0, 1, 1).unwrap(), int(6));
    }

    #[test]
    fn x_symmetry_and_skewness() {
        let c = config(&[&[1, 2, 0], &[3, -5, 2], &[-1, 4, 7], &[2, 2, -3]]);
        for (i, j, k) in [(0, 1, 2), (2, 0, 0), (1, 1, 2)] {
            let x = eval_x(&c, i, j, k).unwrap();
            assert_eq!(x, eval_x(&c, i, k, j).unwrap());
            assert_eq!(-x, eval_x(&c.swapped(0, 3), i, j, k).unwrap());
        }
        assert!(matches!(eval_x(&c, 3, 0, 0), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn subdivision_through_vertex() {
        let c = config(&[&[1, 2], &[3, 5], &[-1, 4]]);
        let o = c.vertex(1).clone();
        for i in 0..2 {
            assert_eq!(subdivision_check(&c, &o, i, 0, 1).unwrap(), int(0));
        }
    }

    #[test]
    fn translation_deltas() {
        let c = config(&[&[1, 2, 0], &[3, -5, 2], &[-1, 4, 7], &[2, 2, -3]]);
        let v = eval_v(&c);
        assert_eq!(translation_action(&c, 1, 0, 1, 2).unwrap(), int(0));
        assert_eq!(translation_action(&c, 2, 0, 0, 2).unwrap(), v);
        assert_eq!(translation_action(&c, 1, 1, 1, 1).unwrap(), int(2) * v);
    }

    #[test]
    fn rotation_small_case() {
        // p = 0, q = 1, i = j = k = 1 in the plane.
        let c = config(&[&[1, 2], &[3, 5], &[-1, 4]]);
        assert_eq!(rotation_action(&c, 0, 1, 1, 1, 1).unwrap(), int(0));
        // derivative = -2 X_{0,11} + ... check the closed form directly:
        // q == j, q == k give X_{1,01} twice; q == i gives X_{0,11}.
        let expected = int(2) * eval_x(&c, 1, 0, 1).unwrap() + eval_x(&c, 0, 1, 1).unwrap();
        assert_eq!(rotation_derivative(&c, 0, 1, 1, 1, 1).unwrap(), expected);
        assert_eq!(rotation_action(&c, 0, 0, 1, 1, 1), Err(Error::BadPlane(0)));
    }

    #[test]
    fn rotation_matches_finite_rotation_to_first_order() {
        // Forward difference along the rotation field.
        let c: Configuration<f64> =
            Simplex::from_ints(&[&[1, 2, 0], &[3, -5, 2], &[-1, 4, 7], &[2, 2, -3]]).unwrap();
        let eps = 1e-6f64;
        let (p, q) = (0, 2);
        let rotated = c.map_vertices(|v| {
            let mut w = v.coords().to_vec();
            w[q] = v[q] + eps * v[p];
            w[p] = v[p] - eps * v[q];
            Point::new(w)
        });
        let (i, j, k) = (2, 0, 1);
        let fd = (eval_x(&rotated, i, j, k).unwrap() - eval_x(&c, i, j, k).unwrap()) / eps;
        let exact = rotation_derivative(&c, p, q, i, j, k).unwrap();
        assert!((fd - exact).abs() < 1e-3 * exact.abs().max(1.0), "{fd} vs {exact}");
    }
}
