//! Small dense elimination routines and an incremental sparse Gauss–Jordan
//! reducer over exact rationals.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::scalar::{Rational, Scalar};
use crate::Error;

/// Determinant of a square matrix given as rows.
pub fn determinant<S: Scalar>(rows: &[Vec<S>]) -> S {
    let n = rows.len();
    debug_assert!(rows.iter().all(|r| r.len() == n));
    let mut m: Vec<Vec<S>> = rows.to_vec();
    let mut det = S::one();
    for col in 0..n {
        let mut pivot = col;
        for row in col + 1..n {
            if m[row][col].better_pivot_than(&m[pivot][col]) {
                pivot = row;
            }
        }
        if m[pivot][col].is_zero() {
            return S::zero();
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det = det * p.clone();
        for row in col + 1..n {
            if m[row][col].is_zero() {
                continue;
            }
            let factor = m[row][col].clone() / p.clone();
            for k in col + 1..n {
                let delta = factor.clone() * m[col][k].clone();
                m[row][k] = m[row][k].clone() - delta;
            }
        }
    }
    det
}

/// Solves the square system `a x = b`. Returns `None` when `a` is singular.
pub fn solve<S: Scalar>(a: &[Vec<S>], b: &[S]) -> Option<Vec<S>> {
    let n = a.len();
    let mut m: Vec<Vec<S>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let mut pivot = col;
        for row in col + 1..n {
            if m[row][col].better_pivot_than(&m[pivot][col]) {
                pivot = row;
            }
        }
        if m[pivot][col].is_zero() {
            return None;
        }
        m.swap(pivot, col);
        let p = m[col][col].clone();
        for row in col + 1..n {
            if m[row][col].is_zero() {
                continue;
            }
            let factor = m[row][col].clone() / p.clone();
            for k in col..=n {
                let delta = factor.clone() * m[col][k].clone();
                m[row][k] = m[row][k].clone() - delta;
            }
        }
    }
    let mut x = vec![S::zero(); n];
    for row in (0..n).rev() {
        let mut acc = m[row][n].clone();
        for k in row + 1..n {
            acc = acc - m[row][k].clone() * x[k].clone();
        }
        x[row] = acc / m[row][row].clone();
    }
    Some(x)
}

/// Sparse row: column index to nonzero coefficient.
pub type SparseRow = BTreeMap<usize, Rational>;

/// Incremental reduced row echelon form of an affine system `A x = b`.
///
/// Rows are inserted one at a time and reduced against the current pivots;
/// pivot rows are kept fully reduced, so each pivot column appears in exactly
/// one stored row.
#[derive(Debug, Clone)]
pub struct RowEchelon {
    columns: usize,
    pivots: BTreeMap<usize, (SparseRow, Rational)>,
}

impl RowEchelon {
    pub fn new(columns: usize) -> Self {
        Self {
            columns,
            pivots: BTreeMap::new(),
        }
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn reduce(&self, row: &SparseRow, rhs: &Rational) -> (SparseRow, Rational) {
        let mut row = row.clone();
        let mut rhs = rhs.clone();
        let hits: Vec<(usize, Rational)> = row
            .iter()
            .filter(|(col, _)| self.pivots.contains_key(col))
            .map(|(col, v)| (*col, v.clone()))
            .collect();
        for (col, factor) in hits {
            let (prow, prhs) = &self.pivots[&col];
            for (k, v) in prow {
                let entry = row.entry(*k).or_insert_with(Rational::zero);
                *entry -= &factor * v;
                if entry.is_zero() {
                    row.remove(k);
                }
            }
            rhs -= &factor * prhs;
        }
        (row, rhs)
    }

    /// Adds a row. Returns `Ok(true)` if it increased the rank, `Ok(false)` if
    /// it was dependent on earlier rows, and `Err(Inconsistent)` if it reduces
    /// to `0 = c` with `c != 0`.
    pub fn insert(&mut self, row: &SparseRow, rhs: &Rational) -> Result<bool, Error> {
        debug_assert!(row.keys().all(|&c| c < self.columns));
        let (mut row, mut rhs) = self.reduce(row, rhs);
        let Some((&pivot_col, lead)) = row.iter().next() else {
            if rhs.is_zero() {
                return Ok(false);
            }
            return Err(Error::Inconsistent);
        };
        let inv = lead.recip();
        for v in row.values_mut() {
            *v *= &inv;
        }
        rhs *= &inv;
        for (prow, prhs) in self.pivots.values_mut() {
            if let Some(factor) = prow.remove(&pivot_col) {
                for (k, v) in &row {
                    if *k == pivot_col {
                        continue;
                    }
                    let entry = prow.entry(*k).or_insert_with(Rational::zero);
                    *entry -= &factor * v;
                    if entry.is_zero() {
                        prow.remove(k);
                    }
                }
                *prhs -= &factor * &rhs;
            }
        }
        self.pivots.insert(pivot_col, (row, rhs));
        Ok(true)
    }

    /// Particular solution with every free variable set to zero.
    pub fn particular(&self) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.columns];
        for (col, (_, rhs)) in &self.pivots {
            x[*col] = rhs.clone();
        }
        x
    }

    /// One basis vector of the homogeneous solution space per free column.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        (0..self.columns)
            .filter(|c| !self.pivots.contains_key(c))
            .map(|free| {
                let mut v = vec![Rational::zero(); self.columns];
                v[free] = Rational::one();
                for (col, (prow, _)) in &self.pivots {
                    if let Some(coef) = prow.get(&free) {
                        v[*col] = -coef.clone();
                    }
                }
                v
            })
            .collect()
    }
}

/// Exact rank of a dense rational matrix.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let columns = rows.first().map_or(0, Vec::len);
    let mut echelon = RowEchelon::new(columns);
    for row in rows {
        let sparse: SparseRow = row
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(c, v)| (c, v.clone()))
            .collect();
        echelon
            .insert(&sparse, &Rational::zero())
            .expect("homogeneous rows are always consistent");
    }
    echelon.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    fn q(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let m = q(&[&[2, -1, 3], &[0, 4, 1], &[5, 2, -2]]);
        // 2(-8-2) - (-1)(0-5) + 3(0-20)
        assert_eq!(determinant(&m), int(-85));
        let f: Vec<Vec<f64>> = m.iter().map(|r| r.iter().map(Scalar::to_f64).collect()).collect();
        assert!((determinant(&f) + 85.0).abs() < 1e-12);
    }

    #[test]
    fn determinant_needs_row_swap() {
        let m = q(&[&[0, 1], &[1, 0]]);
        assert_eq!(determinant(&m), int(-1));
        assert_eq!(determinant(&q(&[&[1, 2], &[2, 4]])), int(0));
    }

    #[test]
    fn solve_exact_and_singular() {
        let a = q(&[&[2, 1], &[1, 3]]);
        let x = solve(&a, &[int(3), int(5)]).unwrap();
        assert_eq!(x, vec![ratio(4, 5), ratio(7, 5)]);
        assert!(solve(&q(&[&[1, 1], &[2, 2]]), &[int(1), int(2)]).is_none());
    }

    #[test]
    fn echelon_particular_and_nullspace() {
        // x0 + x1 + x2 = 1, x0 - x1 = 0, and a duplicate of the first row
        let mut e = RowEchelon::new(3);
        let r1: SparseRow = [(0, int(1)), (1, int(1)), (2, int(1))].into_iter().collect();
        let r2: SparseRow = [(0, int(1)), (1, int(-1))].into_iter().collect();
        assert!(e.insert(&r1, &int(1)).unwrap());
        assert!(e.insert(&r2, &int(0)).unwrap());
        assert!(!e.insert(&r1, &int(1)).unwrap());
        assert!(matches!(e.insert(&r1, &int(2)), Err(Error::Inconsistent)));
        assert_eq!(e.rank(), 2);
        let x = e.particular();
        assert_eq!(&x[0] + &x[1] + &x[2], int(1));
        assert_eq!(x[0], x[1]);
        let ns = e.nullspace();
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        assert_eq!(&v[0] + &v[1] + &v[2], int(0));
        assert_eq!(v[0], v[1]);
    }

    #[test]
    fn rank_of_duplicated_columns() {
        let m = q(&[&[1, 2, 1], &[3, 4, 3], &[5, 6, 5]]);
        assert_eq!(rank(&m), 2);
    }
}
