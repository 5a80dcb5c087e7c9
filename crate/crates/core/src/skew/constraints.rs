//! Linear constraints on coefficient tensors expressing isometry covariance,
//! and their exact solution.
//!
//! Three families of rows, all over the full tensor (no orbit reduction):
//!
//! * coordinate transpositions `s`: `A^l_{i,jk} = A^{s(l)}_{s(i),s(j)s(k)}`;
//! * infinitesimal translations along `r`: `sum_i A^l_{i,ir} = d_lr / 2`;
//! * infinitesimal rotations of the `(p, q)` plane: for every `a, b, c, l`,
//!   the coefficient of `X_{a,bc}` in `eta_pq(y_l) - (d_lq y_p - d_lp y_q)`
//!   vanishes, which gives the eight-term relation built in [`rotation_row`].

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::linalg::{RowEchelon, SparseRow};
use crate::scalar::{ratio, Rational};
use crate::skew::coefficients::{column_of, keys, unknown_count, CenterCoefficients, CoefficientKey};
use crate::Error;

/// Where a row came from. Indices are zero-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum RowTag {
    Transposition { swap: (usize, usize), unknown: CoefficientKey },
    Translation { l: usize, r: usize },
    Rotation { a: usize, b: usize, c: usize, p: usize, q: usize, l: usize },
    Extra(String),
}

impl fmt::Display for RowTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowTag::Transposition { swap, unknown } => {
                write!(f, "TRASP({},{};{})", swap.0, swap.1, unknown.label())
            }
            RowTag::Translation { l, r } => write!(f, "TRANSL({l},{r})"),
            RowTag::Rotation { a, b, c, p, q, l } => write!(f, "ROTA({a},{b},{c},{p},{q},{l})"),
            RowTag::Extra(name) => write!(f, "EXTRA({name})"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ConstraintRow {
    pub tag: RowTag,
    pub coeffs: SparseRow,
    pub rhs: Rational,
}

impl ConstraintRow {
    pub fn residual(&self, x: &[Rational]) -> Rational {
        self.coeffs
            .iter()
            .fold(-self.rhs.clone(), |acc, (col, a)| acc + a * &x[*col])
    }
}

#[derive(Debug, Clone)]
pub struct ConstraintSystem {
    n: usize,
    rows: Vec<ConstraintRow>,
}

fn add_term(row: &mut SparseRow, n: usize, key: CoefficientKey, coef: Rational) {
    if coef.is_zero() {
        return;
    }
    let col = column_of(n, key);
    let entry = row.entry(col).or_insert_with(Rational::zero);
    *entry += coef;
    if entry.is_zero() {
        row.remove(&col);
    }
}

/// Coefficients of the eight-term rotation relation for fixed
/// `a, b, c, p, q, l` (with `p != q`).
pub fn rotation_row(n: usize, a: usize, b: usize, c: usize, p: usize, q: usize, l: usize) -> SparseRow {
    let one = Rational::one;
    let key = CoefficientKey::new;
    let mut row = SparseRow::new();
    if p == b {
        add_term(&mut row, n, key(l, a, q, c), one());
    }
    if p == c {
        add_term(&mut row, n, key(l, a, q, b), one());
    }
    if q == a {
        add_term(&mut row, n, key(l, p, b, c), -one());
    }
    if q == b {
        add_term(&mut row, n, key(l, a, p, c), -one());
    }
    if q == c {
        add_term(&mut row, n, key(l, a, p, b), -one());
    }
    if p == a {
        add_term(&mut row, n, key(l, q, b, c), one());
    }
    if l == q {
        add_term(&mut row, n, key(p, a, b, c), -one());
    }
    if l == p {
        add_term(&mut row, n, key(q, a, b, c), one());
    }
    row
}

fn transpose_index(swap: (usize, usize), x: usize) -> usize {
    if x == swap.0 {
        swap.1
    } else if x == swap.1 {
        swap.0
    } else {
        x
    }
}

impl ConstraintSystem {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn unknowns(&self) -> usize {
        unknown_count(self.n)
    }

    pub fn rows(&self) -> &[ConstraintRow] {
        &self.rows
    }

    pub fn push(&mut self, tag: RowTag, coeffs: SparseRow, rhs: Rational) {
        self.rows.push(ConstraintRow { tag, coeffs, rhs });
    }

    /// Pins one unknown to a value, e.g. to select a point on the solution line.
    pub fn pin(&mut self, key: CoefficientKey, value: Rational) {
        let mut row = SparseRow::new();
        row.insert(column_of(self.n, key), Rational::one());
        self.push(RowTag::Extra(format!("{} = {}", key.label(), value)), row, value);
    }

    /// First violated row, if any.
    pub fn first_violation(&self, coeffs: &CenterCoefficients<Rational>) -> Option<&ConstraintRow> {
        self.rows
            .iter()
            .find(|row| !row.residual(coeffs.as_slice()).is_zero())
    }

    pub fn is_satisfied_by(&self, coeffs: &CenterCoefficients<Rational>) -> bool {
        self.first_violation(coeffs).is_none()
    }

    pub fn count_by_family(&self) -> (usize, usize, usize) {
        self.rows.iter().fold((0, 0, 0), |(t, s, r), row| match row.tag {
            RowTag::Transposition { .. } => (t + 1, s, r),
            RowTag::Translation { .. } => (t, s + 1, r),
            RowTag::Rotation { .. } => (t, s, r + 1),
            RowTag::Extra(_) => (t, s, r),
        })
    }
}

/// All transposition, translation and rotation rows for dimension `n`.
pub fn build_constraint_system(n: usize) -> Result<ConstraintSystem, Error> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "constraint system needs n >= 2, got {n}"
        )));
    }
    let mut sys = ConstraintSystem {
        n,
        rows: Vec::new(),
    };
    for s0 in 0..n {
        for s1 in s0 + 1..n {
            let swap = (s0, s1);
            for key in keys(n) {
                let image = CoefficientKey::new(
                    transpose_index(swap, key.l),
                    transpose_index(swap, key.i),
                    transpose_index(swap, key.j),
                    transpose_index(swap, key.k),
                );
                let mut row = SparseRow::new();
                add_term(&mut row, n, key, Rational::one());
                add_term(&mut row, n, image, -Rational::one());
                sys.push(RowTag::Transposition { swap, unknown: key }, row, Rational::zero());
            }
        }
    }
    for l in 0..n {
        for r in 0..n {
            let mut row = SparseRow::new();
            for i in 0..n {
                add_term(&mut row, n, CoefficientKey::new(l, i, i, r), Rational::one());
            }
            let rhs = if l == r { ratio(1, 2) } else { Rational::zero() };
            sys.push(RowTag::Translation { l, r }, row, rhs);
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for p in 0..n {
                    for q in 0..n {
                        if p == q {
                            continue;
                        }
                        for l in 0..n {
                            let row = rotation_row(n, a, b, c, p, q, l);
                            sys.push(RowTag::Rotation { a, b, c, p, q, l }, row, Rational::zero());
                        }
                    }
                }
            }
        }
    }
    Ok(sys)
}

/// Solution set of a constraint system: `particular + span(homogeneous_basis)`.
#[derive(Debug, Clone)]
pub struct AffineSolution {
    pub particular: CenterCoefficients<Rational>,
    pub homogeneous_basis: Vec<CenterCoefficients<Rational>>,
    pub rank: usize,
}

impl AffineSolution {
    pub fn dimension(&self) -> usize {
        self.homogeneous_basis.len()
    }
}

/// Exact Gauss–Jordan reduction of the whole system.
///
/// Every returned vector is re-substituted into every row; a nonzero residual
/// is reported as a certification failure.
pub fn solve_affine_space(sys: &ConstraintSystem) -> Result<AffineSolution, Error> {
    let n = sys.dim();
    let mut echelon = RowEchelon::new(sys.unknowns());
    for row in sys.rows() {
        echelon.insert(&row.coeffs, &row.rhs)?;
    }
    let particular = CenterCoefficients::from_vec(n, echelon.particular())?;
    if let Some(row) = sys.first_violation(&particular) {
        return Err(Error::CertificationFailed(format!(
            "particular solution violates {}",
            row.tag
        )));
    }
    let homogeneous_basis = echelon
        .nullspace()
        .into_iter()
        .map(|v| CenterCoefficients::from_vec(n, v))
        .collect::<Result<Vec<_>, _>>()?;
    for h in &homogeneous_basis {
        if let Some(row) = sys
            .rows()
            .iter()
            .find(|row| !(row.residual(h.as_slice()) + &row.rhs).is_zero())
        {
            return Err(Error::CertificationFailed(format!(
                "homogeneous vector violates {}",
                row.tag
            )));
        }
    }
    Ok(AffineSolution {
        particular,
        homogeneous_basis,
        rank: echelon.rank(),
    })
}
