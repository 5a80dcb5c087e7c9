//! Exact real numbers of the form `q_0 + q_1 pi + sum q_k sqrt(m_k) + sum q_j angle(w_j)`.
//!
//! `angle(w)` is the polar angle in `[0, 2 pi)` of a primitive integer
//! direction `w`; the eight axis and diagonal directions are rewritten as
//! rational multiples of `pi`. Square roots are reduced by trial division, so
//! two equal values may occasionally have different representations. Equality
//! of the stored terms therefore implies equality of values but not the
//! converse.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::scalar::{format_exact, ratio, Rational};

const TRIAL_DIVISION_LIMIT: u32 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    One,
    Pi,
    /// Square root of a positive integer that is not a perfect square.
    Sqrt(BigInt),
    /// Polar angle of a primitive integer direction.
    Angle(BigInt, BigInt),
}

impl Atom {
    fn to_f64(&self) -> f64 {
        match self {
            Atom::One => 1.0,
            Atom::Pi => std::f64::consts::PI,
            Atom::Sqrt(m) => m.to_f64().unwrap_or(f64::NAN).sqrt(),
            Atom::Angle(x, y) => {
                let a = y.to_f64().unwrap_or(f64::NAN).atan2(x.to_f64().unwrap_or(f64::NAN));
                if a < 0.0 {
                    a + std::f64::consts::TAU
                } else {
                    a
                }
            }
        }
    }

    fn name(&self) -> String {
        match self {
            Atom::One => "rat".into(),
            Atom::Pi => "pi".into(),
            Atom::Sqrt(m) => format!("sqrt({m})"),
            Atom::Angle(x, y) => format!("angle({x},{y})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExactReal {
    terms: BTreeMap<Atom, Rational>,
}

impl ExactReal {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn rational(q: Rational) -> Self {
        Self::term(Atom::One, q)
    }

    pub fn pi() -> Self {
        Self::term(Atom::Pi, Rational::one())
    }

    pub fn term(atom: Atom, coef: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(atom, coef);
        }
        Self { terms }
    }

    /// Square root of a nonnegative rational.
    pub fn sqrt(q: &Rational) -> Self {
        assert!(!q.is_negative(), "square root of a negative rational");
        if q.is_zero() {
            return Self::zero();
        }
        let denom = q.denom().clone();
        let (square, free) = split_square(q.numer() * &denom);
        let coef = Rational::new(square, denom);
        if free.is_one() {
            Self::rational(coef)
        } else {
            Self::term(Atom::Sqrt(free), coef)
        }
    }

    /// Polar angle in `[0, 2 pi)` of a nonzero rational direction.
    pub fn angle_of(x: &Rational, y: &Rational) -> Self {
        let (a, b) = primitive_direction(x, y);
        let sign = |v: &BigInt| v.signum().to_i64().unwrap_or(0);
        let eighths = match (sign(&a), sign(&b), a.abs() == b.abs()) {
            (1, 0, _) => Some(0),
            (1, 1, true) => Some(1),
            (0, 1, _) => Some(2),
            (-1, 1, true) => Some(3),
            (-1, 0, _) => Some(4),
            (-1, -1, true) => Some(5),
            (0, -1, _) => Some(6),
            (1, -1, true) => Some(7),
            _ => None,
        };
        match eighths {
            Some(k) => Self::term(Atom::Pi, ratio(k, 4)),
            None => Self::term(Atom::Angle(a, b), Rational::one()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Atom, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, atom: &Atom) -> Rational {
        self.terms.get(atom).cloned().unwrap_or_else(Rational::zero)
    }

    /// Rational part.
    pub fn rat(&self) -> Rational {
        self.coefficient(&Atom::One)
    }

    /// Coefficient of `pi`.
    pub fn pi_part(&self) -> Rational {
        self.coefficient(&Atom::Pi)
    }

    /// `Some(q)` when the value is the rational `q`.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Atom::One).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(a, c)| (a.clone(), c * q)).collect(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(a, c)| c.to_f64().unwrap_or(f64::NAN) * a.to_f64())
            .sum()
    }

    fn accumulate(&mut self, atom: &Atom, coef: &Rational) {
        let entry = self.terms.entry(atom.clone()).or_insert_with(Rational::zero);
        *entry += coef;
        if entry.is_zero() {
            self.terms.remove(atom);
        }
    }
}

/// `m = s^2 f` with `f` free of small square factors.
fn split_square(mut m: BigInt) -> (BigInt, BigInt) {
    let mut square = BigInt::one();
    let mut k = 2u32;
    while k <= TRIAL_DIVISION_LIMIT {
        let kk = BigInt::from(k) * k;
        if kk > m {
            break;
        }
        while m.is_multiple_of(&kk) {
            m /= &kk;
            square *= k;
        }
        k += 1;
    }
    let root = m.sqrt();
    if &root * &root == m {
        square *= root;
        m = BigInt::one();
    }
    (square, m)
}

fn primitive_direction(x: &Rational, y: &Rational) -> (BigInt, BigInt) {
    assert!(!(x.is_zero() && y.is_zero()), "angle of the zero vector");
    let l = x.denom().lcm(y.denom());
    let a = x.numer() * (&l / x.denom());
    let b = y.numer() * (&l / y.denom());
    let g = a.gcd(&b);
    (a / &g, b / &g)
}

impl Add for &ExactReal {
    type Output = ExactReal;
    fn add(self, rhs: &ExactReal) -> ExactReal {
        let mut out = self.clone();
        for (a, c) in &rhs.terms {
            out.accumulate(a, c);
        }
        out
    }
}

impl Add for ExactReal {
    type Output = ExactReal;
    fn add(self, rhs: ExactReal) -> ExactReal {
        &self + &rhs
    }
}

impl Neg for &ExactReal {
    type Output = ExactReal;
    fn neg(self) -> ExactReal {
        self.scale(&-Rational::one())
    }
}

impl Neg for ExactReal {
    type Output = ExactReal;
    fn neg(self) -> ExactReal {
        -&self
    }
}

impl Sub for &ExactReal {
    type Output = ExactReal;
    fn sub(self, rhs: &ExactReal) -> ExactReal {
        self + &(-rhs)
    }
}

impl Sub for ExactReal {
    type Output = ExactReal;
    fn sub(self, rhs: ExactReal) -> ExactReal {
        &self - &rhs
    }
}

impl Mul<&Rational> for &ExactReal {
    type Output = ExactReal;
    fn mul(self, rhs: &Rational) -> ExactReal {
        self.scale(rhs)
    }
}

impl fmt::Display for ExactReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(a, c)| match a {
                Atom::One => format_exact(c),
                _ => format!("{}*{}", format_exact(c), a.name()),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Writes `{"rat": "p/q", "pi": "r/s"}` plus one entry per other atom.
impl Serialize for ExactReal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let extra = self
            .terms
            .keys()
            .filter(|a| !matches!(a, Atom::One | Atom::Pi))
            .count();
        let mut map = s.serialize_map(Some(2 + extra))?;
        map.serialize_entry("rat", &format_exact(&self.rat()))?;
        map.serialize_entry("pi", &format_exact(&self.pi_part()))?;
        for (a, c) in &self.terms {
            if !matches!(a, Atom::One | Atom::Pi) {
                map.serialize_entry(&a.name(), &format_exact(c))?;
            }
        }
        map.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn square_roots_reduce() {
        assert_eq!(ExactReal::sqrt(&int(9)), ExactReal::rational(int(3)));
        assert_eq!(ExactReal::sqrt(&ratio(1, 4)), ExactReal::rational(ratio(1, 2)));
        assert_eq!(ExactReal::sqrt(&int(12)), ExactReal::term(Atom::Sqrt(BigInt::from(3)), int(2)));
        assert_eq!(
            ExactReal::sqrt(&ratio(5, 4)),
            ExactReal::term(Atom::Sqrt(BigInt::from(5)), ratio(1, 2))
        );
        let big = Rational::from_integer(BigInt::from(10_007u64 * 10_007));
        assert_eq!(ExactReal::sqrt(&big), ExactReal::rational(int(10_007)));
        assert!((ExactReal::sqrt(&ratio(2, 3)).to_f64() - (2.0f64 / 3.0).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn special_angles_are_pi_multiples() {
        assert_eq!(ExactReal::angle_of(&int(0), &int(3)), ExactReal::term(Atom::Pi, ratio(1, 2)));
        assert_eq!(ExactReal::angle_of(&int(-2), &int(-2)), ExactReal::term(Atom::Pi, ratio(5, 4)));
        assert!(ExactReal::angle_of(&int(1), &int(0)).is_zero());
        let a = ExactReal::angle_of(&ratio(1, 2), &ratio(-1, 3));
        assert_eq!(a, ExactReal::term(Atom::Angle(BigInt::from(3), BigInt::from(-2)), int(1)));
        assert!((a.to_f64() - ((-2.0f64).atan2(3.0) + std::f64::consts::TAU)).abs() < 1e-15);
    }

    #[test]
    fn arithmetic_cancels_terms() {
        let x = ExactReal::sqrt(&int(2)) + ExactReal::pi();
        let y = &x - &ExactReal::sqrt(&int(8)).scale(&ratio(1, 2));
        assert_eq!(y, ExactReal::pi());
        assert!((&y - &ExactReal::pi()).is_zero());
    }

    #[test]
    fn serializes_with_rat_and_pi() {
        let x = ExactReal::rational(ratio(1, 2)) + ExactReal::pi().scale(&ratio(3, 4));
        assert_eq!(
            serde_json::to_string(&x).unwrap(),
            r#"{"rat":"1/2","pi":"3/4"}"#
        );
        let z = ExactReal::sqrt(&int(5));
        assert_eq!(
            serde_json::to_string(&z).unwrap(),
            r#"{"rat":"0/1","pi":"0/1","sqrt(5)":"1/1"}"#
        );
    }
}
