//! The field abstraction the linear algebra and polynomial code is written against.
//!
//! Everything here needs exact zero tests, so only exact fields implement
//! [`Field`]: arbitrary-precision rationals (the default everywhere) and
//! machine-word rationals for cheap experiments.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, Signed};

pub trait Field:
    Clone + Debug + Display + PartialEq + Eq + Hash + PartialOrd + Num + Signed + FromPrimitive + Send + Sync + 'static
{
    /// Rough size of the value in bits, used to pick cheap pivots.
    fn bit_size(&self) -> u64;

    fn from_int(value: i64) -> Self {
        Self::from_i64(value).expect("every field here contains the integers")
    }

    fn inverse(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Field for BigRational {
    fn bit_size(&self) -> u64 {
        self.numer().bits() + self.denom().bits()
    }
}

impl Field for Ratio<i64> {
    fn bit_size(&self) -> u64 {
        let bits = |v: i64| 64 - v.unsigned_abs().leading_zeros() as u64;
        bits(*self.numer()) + bits(*self.denom())
    }
}

/// Arbitrary-precision rational number, always in lowest terms.
pub type Rational = BigRational;

/// Builds the rational `numer / denom`.
///
/// Panics if `denom` is zero.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses `a` or `a/b` with optional sign; whitespace around the value is ignored.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let numer: BigInt = numer.parse().ok()?;
    let denom: BigInt = denom.parse().ok()?;
    if denom == BigInt::from(0) {
        return None;
    }
    Some(Rational::new(numer, denom))
}

/// A rational as it appears in JSON input: `"a/b"` text or a bare integer.
#[derive(Clone, Debug, serde::Serialize, serde::Deserialize)]
#[serde(untagged)]
pub(crate) enum RationalText {
    Text(String),
    Int(i64),
}

impl RationalText {
    pub(crate) fn value(&self) -> crate::Result<Rational> {
        match self {
            RationalText::Int(v) => Ok(int(*v)),
            RationalText::Text(t) => {
                parse_rational(t).ok_or_else(|| crate::Error::InvalidInput(format!("bad rational {t:?}")))
            }
        }
    }
}
