//! Number backends.
//!
//! Every geometric routine in this crate is generic over [`Scalar`], which has
//! exactly two implementations: [`Rational`] (arbitrary precision, no rounding)
//! and `f64`. Identity checks go through [`Scalar::close_to`], which ignores
//! the tolerance on the exact backend and requires it on the float backend.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational number.
pub type Rational = num_rational::BigRational;

pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + PartialOrd
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    /// `true` when arithmetic never rounds.
    const EXACT: bool;

    fn from_integer(value: i64) -> Self;

    fn from_rational(value: &Rational) -> Self;

    fn to_f64(&self) -> f64;

    fn abs(&self) -> Self;

    /// Equality up to `tol` on the float backend; exact equality otherwise.
    fn close_to(&self, other: &Self, tol: f64) -> bool;

    /// Whether `self` is a better elimination pivot than `other`.
    ///
    /// Exact elimination accepts the first nonzero entry, floating point
    /// elimination uses partial pivoting.
    fn better_pivot_than(&self, other: &Self) -> bool;

    fn from_ratio(numer: i64, denom: i64) -> Self {
        Self::from_integer(numer) / Self::from_integer(denom)
    }

    fn factorial(n: usize) -> Self {
        (1..=n as i64).fold(Self::one(), |acc, k| acc * Self::from_integer(k))
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_integer(value: i64) -> Self {
        Rational::from_integer(BigInt::from(value))
    }

    fn from_rational(value: &Rational) -> Self {
        value.clone()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn abs(&self) -> Self {
        Signed::abs(self)
    }

    fn close_to(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }

    fn better_pivot_than(&self, other: &Self) -> bool {
        other.is_zero() && !self.is_zero()
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_integer(value: i64) -> Self {
        value as f64
    }

    fn from_rational(value: &Rational) -> Self {
        ToPrimitive::to_f64(value).unwrap_or(f64::NAN)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn abs(&self) -> Self {
        f64::abs(*self)
    }

    fn close_to(&self, other: &Self, tol: f64) -> bool {
        (self - other).abs() <= tol
    }

    fn better_pivot_than(&self, other: &Self) -> bool {
        f64::abs(*self) > f64::abs(*other)
    }
}

/// Builds `numer/denom` as an exact rational.
///
/// Panics if `denom` is zero.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Formats a rational as `"p/q"`, always including the denominator.
pub fn format_exact(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Parses an integer fraction `"p/q"` or a plain integer `"p"`.
///
/// Unreduced fractions are accepted and reduced; a zero denominator is
/// rejected.
pub fn parse_exact(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let numer: BigInt = numer.parse().ok()?;
    let denom: BigInt = denom.parse().ok()?;
    if denom.is_zero() {
        return None;
    }
    Some(Rational::new(numer, denom))
}

/// Parses a finite decimal literal such as `-1.25e-3` into the exact rational
/// it denotes.
pub fn parse_decimal(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (mantissa, exponent) = match text.find(['e', 'E']) {
        Some(pos) => (&text[..pos], text[pos + 1..].parse::<i64>().ok()?),
        None => (text, 0),
    };
    let (negative, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("{whole}{frac}").parse().ok()?;
    let scale = exponent - frac.len() as i64;
    let ten = BigInt::from(10);
    let mut value = if scale >= 0 {
        Rational::from_integer(digits * num_traits::pow(ten, scale as usize))
    } else {
        Rational::new(digits, num_traits::pow(ten, (-scale) as usize))
    };
    if negative {
        value = -value;
    }
    Some(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_strings() {
        assert_eq!(format_exact(&int(1)), "1/1");
        assert_eq!(format_exact(&int(0)), "0/1");
        assert_eq!(format_exact(&ratio(-6, 4)), "-3/2");
        assert_eq!(parse_exact("6/4"), Some(ratio(3, 2)));
        assert_eq!(parse_exact("-7"), Some(int(-7)));
        assert_eq!(parse_exact("1/0"), None);
        assert_eq!(parse_exact("a/2"), None);
    }

    #[test]
    fn decimals_are_exact() {
        assert_eq!(parse_decimal("0.1"), Some(ratio(1, 10)));
        assert_eq!(parse_decimal("-1.25e-3"), Some(ratio(-1, 800)));
        assert_eq!(parse_decimal("2E2"), Some(int(200)));
        assert_eq!(parse_decimal("."), None);
        assert_eq!(parse_decimal("1.2.3"), None);
    }

    #[test]
    fn float_comparisons_need_tolerance() {
        assert!(0.1f64.close_to(&(0.1 + 1e-12), 1e-9));
        assert!(!0.1f64.close_to(&0.2, 1e-9));
        assert!(!ratio(1, 10).close_to(&ratio(1, 11), 1.0));
    }

    #[test]
    fn factorials() {
        assert_eq!(Rational::factorial(4), int(24));
        assert_eq!(f64::factorial(0), 1.0);
    }
}
