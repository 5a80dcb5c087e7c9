//! Serde helpers that write exact values as `"p/q"` strings.

use serde::ser::{SerializeSeq, Serializer};

use crate::geometry::Point;
use crate::scalar::{format_exact, Rational};

pub fn rational<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_exact(value))
}

pub fn point<S: Serializer>(p: &Point<Rational>, s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(p.dim()))?;
    for c in p.coords() {
        seq.serialize_element(&format_exact(c))?;
    }
    seq.end()
}

pub fn points<S: Serializer>(ps: &[Point<Rational>], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(ps.len()))?;
    for p in ps {
        let coords: Vec<String> = p.coords().iter().map(format_exact).collect();
        seq.serialize_element(&coords)?;
    }
    seq.end()
}
