//! Exact rationals for densities, bound sides and slacks.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Reduced fraction with a positive denominator.
///
/// Arithmetic is checked; overflow is an error, never a wraparound.
/// Comparison cross-multiplies in `i128`, so it is exact for every pair of
/// representable values.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational(Ratio<i64>);

impl Rational {
    pub const ZERO: Self = Self(Ratio::new_raw(0, 1));

    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::Overflow("zero denominator".into()));
        }
        if den == i64::MIN || num == i64::MIN {
            return Err(Error::Overflow("rational out of range".into()));
        }
        Ok(Self(Ratio::new(num, den)))
    }

    pub fn integer(n: i64) -> Self {
        Self(Ratio::from_integer(n))
    }

    /// `num / den` for unsigned machine quantities.
    pub fn from_u64s(num: u64, den: u64) -> Result<Self> {
        Self::new(to_i64(num)?, to_i64(den)?)
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        self.0.checked_add(&rhs.0).map(Self).ok_or_else(overflow)
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        self.0.checked_sub(&rhs.0).map(Self).ok_or_else(overflow)
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        self.0.checked_mul(&rhs.0).map(Self).ok_or_else(overflow)
    }

    pub fn checked_div(self, rhs: Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::Overflow("division by zero".into()));
        }
        self.0.checked_div(&rhs.0).map(Self).ok_or_else(overflow)
    }

    /// Lossy decimal view, for display only.
    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }
}

fn overflow() -> Error {
    Error::Overflow("rational arithmetic".into())
}

pub(crate) fn to_i64(n: u64) -> Result<i64> {
    i64::try_from(n).map_err(|_| Error::Overflow(format!("{n} does not fit in i64")))
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = i128::from(self.numer()) * i128::from(other.denom());
        let rhs = i128::from(other.numer()) * i128::from(self.denom());
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    num: i64,
    den: i64,
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Wire {
            num: self.numer(),
            den: self.denom(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        let r = Rational::new(w.num, w.den).map_err(serde::de::Error::custom)?;
        if r.numer() != w.num || r.denom() != w.den {
            return Err(serde::de::Error::custom(format!(
                "{}/{} is not in lowest terms",
                w.num, w.den
            )));
        }
        Ok(r)
    }
}
