//! Exact rationals with a stable `num/den` text form.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A reduced, sign-normalized rational number (denominator always positive).
///
/// Displays and serializes as `"num/den"` even when the denominator is 1, so
/// that values compare as strings across tools.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(Ratio<i128>);

impl Rational {
    pub fn new(num: i128, den: i128) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(Ratio::new(num, den)))
    }

    /// Builds `num / den` from unsigned sums, checking that both fit in `i128`.
    pub fn from_u128(num: u128, den: u128) -> Result<Self> {
        let num = i128::try_from(num).map_err(|_| Error::Overflow("rational numerator"))?;
        let den = i128::try_from(den).map_err(|_| Error::Overflow("rational denominator"))?;
        Self::new(num, den)
    }

    pub fn from_integer(value: i128) -> Self {
        Rational(Ratio::from_integer(value))
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.0
            .checked_add(&other.0)
            .map(Rational)
            .ok_or(Error::Overflow("rational addition"))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.0
            .checked_mul(&other.0)
            .map(Rational)
            .ok_or(Error::Overflow("rational multiplication"))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.numer() == 0 {
            return Err(Error::DivisionByZero);
        }
        self.0
            .checked_div(&other.0)
            .map(Rational)
            .ok_or(Error::Overflow("rational division"))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |message: &str| Error::Parse {
            line: 1,
            column: 1,
            message: format!("{message}: {s:?}"),
        };
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num: i128 = num.parse().map_err(|_| bad("bad rational numerator"))?;
        let den: i128 = den.parse().map_err(|_| bad("bad rational denominator"))?;
        Rational::new(num, den)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
