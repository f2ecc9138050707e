//! Exact half-integer arithmetic.
//!
//! A [`HalfInt`] stores twice its value, so all arithmetic stays in `i64`.
//! Serialized as the string `"<twice>/2"`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A half-integer, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    /// The half-integer `twice/2`.
    pub const fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    /// The integer `k` as a half-integer.
    pub const fn from_int(k: i64) -> Self {
        HalfInt { twice: 2 * k }
    }

    pub const ZERO: HalfInt = HalfInt { twice: 0 };

    pub const fn twice(self) -> i64 {
        self.twice
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub fn abs(self) -> Self {
        HalfInt {
            twice: self.twice.abs(),
        }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice + rhs.twice)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice - rhs.twice)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_twice(-self.twice)
    }
}

impl Mul<i64> for HalfInt {
    type Output = HalfInt;
    fn mul(self, rhs: i64) -> HalfInt {
        HalfInt::from_twice(self.twice * rhs)
    }
}

impl From<i64> for HalfInt {
    fn from(k: i64) -> Self {
        HalfInt::from_int(k)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2", self.twice)
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for HalfInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        let twice = text
            .strip_suffix("/2")
            .ok_or_else(|| D::Error::custom("half-integer must look like \"<int>/2\""))?
            .trim()
            .parse::<i64>()
            .map_err(D::Error::custom)?;
        Ok(HalfInt::from_twice(twice))
    }
}
