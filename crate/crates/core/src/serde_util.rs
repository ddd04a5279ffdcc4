//! Serialisation helpers shared by every JSON report.
//!
//! Floating values are written with 12 significant digits; exact integers
//! that may exceed 64 bits are written as decimal strings.

use num_bigint::BigInt;
use serde::ser::{SerializeSeq, Serializer};

use crate::linalg::{CharPolyExact, SquareMatrix};

/// Rounds to 12 significant digits and folds `-0` into `0`.
pub fn round_sig12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    let r: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

pub fn sig12<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(round_sig12(*x))
}

pub fn sig12_opt<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_some(&round_sig12(*v)),
        None => s.serialize_none(),
    }
}

pub fn sig12_vec<S: Serializer>(xs: &[f64], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&round_sig12(*x))?;
    }
    seq.end()
}

pub fn matrix_rows<S: Serializer>(m: &SquareMatrix<i64>, s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(m.order()))?;
    for row in m.rows() {
        seq.serialize_element(row)?;
    }
    seq.end()
}

pub fn bigint_strings<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

pub fn char_poly<S: Serializer>(p: &CharPolyExact, s: S) -> Result<S::Ok, S::Error> {
    bigint_strings(p.coeffs(), s)
}

pub fn u64_string<S: Serializer>(x: &u64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}
