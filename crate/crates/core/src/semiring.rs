use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::array::ArrayCode;
use crate::error::{Error, Result};

/// How `1 + 1` is interpreted when adding outer products.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Semiring {
    /// The field with two elements, `1 + 1 = 0`.
    #[serde(rename = "gf2")]
    Gf2,
    /// The Boolean semiring, `1 + 1 = 1`.
    #[serde(rename = "bool")]
    Boolean,
    /// Non-negative integers, `1 + 1 = 2`. Only sums of terms with disjoint
    /// support stay inside `{0, 1}`.
    #[serde(rename = "nat")]
    NonNegInt,
}

impl Semiring {
    pub const ALL: [Semiring; 3] = [Semiring::Gf2, Semiring::Boolean, Semiring::NonNegInt];

    /// Short name used on the command line and in files.
    pub fn tag(self) -> &'static str {
        match self {
            Semiring::Gf2 => "gf2",
            Semiring::Boolean => "bool",
            Semiring::NonNegInt => "nat",
        }
    }

    pub(crate) fn byte(self) -> u8 {
        match self {
            Semiring::Gf2 => 0,
            Semiring::Boolean => 1,
            Semiring::NonNegInt => 2,
        }
    }

    pub(crate) fn from_byte(b: u8) -> Option<Self> {
        Semiring::ALL.into_iter().find(|s| s.byte() == b)
    }

    /// Adds two codes, or returns `None` when the sum leaves `{0, 1}`.
    #[inline]
    pub fn add_codes(self, x: u64, y: u64) -> Option<u64> {
        match self {
            Semiring::Gf2 => Some(x ^ y),
            Semiring::Boolean => Some(x | y),
            Semiring::NonNegInt => (x & y == 0).then_some(x | y),
        }
    }
}

impl fmt::Display for Semiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Semiring::Gf2 => "GF(2)",
            Semiring::Boolean => "Boolean",
            Semiring::NonNegInt => "non-negative integer",
        })
    }
}

impl FromStr for Semiring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gf2" | "f2" | "field" => Ok(Semiring::Gf2),
            "bool" | "boolean" => Ok(Semiring::Boolean),
            "nat" | "int" | "integer" => Ok(Semiring::NonNegInt),
            _ => Err(Error::Malformed(format!("unknown semiring `{s}`"))),
        }
    }
}

/// Sum of two arrays. `Ok(None)` is a rejection: the integer sum would
/// contain a 2.
pub fn combine(x: ArrayCode, y: ArrayCode, s: Semiring) -> Result<Option<ArrayCode>> {
    x.shape().check_same(y.shape())?;
    Ok(s.add_codes(x.code(), y.code())
        .map(|z| ArrayCode::from_raw(z, x.shape())))
}
