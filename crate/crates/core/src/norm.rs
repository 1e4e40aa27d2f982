//! Triangular norms and conorms.
//!
//! Every set and matrix operation in this crate is parameterized by a
//! [`NormPair`]: a t-norm (fuzzy AND) together with its dual t-conorm
//! (fuzzy OR), related by `s(a, b) = 1 - t(1 - a, 1 - b)`.
//!
//! Six non-parameterized dual pairs are provided:
//!
//! | id          | t-norm                          | t-conorm                          |
//! |-------------|---------------------------------|-----------------------------------|
//! | `drastic`   | `min(a,b)` if `max(a,b)=1`, else 0 | `max(a,b)` if `min(a,b)=0`, else 1 |
//! | `bounded`   | `max(0, a+b-1)`                 | `min(1, a+b)`                     |
//! | `einstein`  | `ab / (2 - (a+b-ab))`           | `(a+b) / (1+ab)`                  |
//! | `algebraic` | `ab`                            | `a+b-ab`                          |
//! | `hamacher`  | `ab / (a+b-ab)`                 | `(a+b-2ab) / (1-ab)`              |
//! | `minmax`    | `min(a,b)`                      | `max(a,b)`                        |

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A real number in the closed unit interval.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default, Serialize)]
#[serde(transparent)]
pub struct UnitValue(f64);

impl UnitValue {
    pub const ZERO: UnitValue = UnitValue(0.0);
    pub const ONE: UnitValue = UnitValue(1.0);

    /// Rejects NaN and anything outside `[0, 1]`.
    pub fn new(value: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&value) {
            Ok(UnitValue(value))
        } else {
            Err(Error::OutOfRange { value })
        }
    }

    /// Clamps a computed value into `[0, 1]`. Only used on outputs of the
    /// norm formulas, whose exact values lie in range but whose floating
    /// point evaluation can overshoot by an ulp.
    pub(crate) fn saturating(value: f64) -> Self {
        debug_assert!(!value.is_nan());
        UnitValue(value.clamp(0.0, 1.0))
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }

    /// `1 - self`.
    #[inline]
    pub fn complement(self) -> Self {
        UnitValue(1.0 - self.0)
    }
}

impl TryFrom<f64> for UnitValue {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        UnitValue::new(value)
    }
}

impl From<UnitValue> for f64 {
    fn from(value: UnitValue) -> f64 {
        value.0
    }
}

impl<'de> Deserialize<'de> for UnitValue {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = f64::deserialize(deserializer)?;
        UnitValue::new(raw).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for UnitValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Identifier of one of the six dual norm pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NormId {
    Drastic,
    Bounded,
    Einstein,
    Algebraic,
    Hamacher,
    #[default]
    Minmax,
}

impl NormId {
    pub const ALL: [NormId; 6] = [
        NormId::Drastic,
        NormId::Bounded,
        NormId::Einstein,
        NormId::Algebraic,
        NormId::Hamacher,
        NormId::Minmax,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NormId::Drastic => "drastic",
            NormId::Bounded => "bounded",
            NormId::Einstein => "einstein",
            NormId::Algebraic => "algebraic",
            NormId::Hamacher => "hamacher",
            NormId::Minmax => "minmax",
        }
    }

    pub fn pair(self) -> NormPair {
        NormPair::from(self)
    }
}

impl fmt::Display for NormId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NormId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NormId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownNorm(s.to_string()))
    }
}

type BinaryOp = fn(f64, f64) -> f64;

/// A t-norm together with its dual t-conorm.
#[derive(Clone, Copy)]
pub struct NormPair {
    id: NormId,
    tnorm: BinaryOp,
    tconorm: BinaryOp,
}

impl NormPair {
    pub fn id(&self) -> NormId {
        self.id
    }

    /// Fuzzy AND.
    #[inline]
    pub fn tnorm(&self, a: UnitValue, b: UnitValue) -> UnitValue {
        UnitValue::saturating((self.tnorm)(a.0, b.0))
    }

    /// Fuzzy OR.
    #[inline]
    pub fn tconorm(&self, a: UnitValue, b: UnitValue) -> UnitValue {
        UnitValue::saturating((self.tconorm)(a.0, b.0))
    }
}

impl fmt::Debug for NormPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("NormPair").field(&self.id).finish()
    }
}

impl PartialEq for NormPair {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}

impl Eq for NormPair {}

impl Default for NormPair {
    fn default() -> Self {
        NormId::Minmax.pair()
    }
}

impl From<NormId> for NormPair {
    fn from(id: NormId) -> Self {
        let (tnorm, tconorm): (BinaryOp, BinaryOp) = match id {
            NormId::Drastic => (drastic_product, drastic_sum),
            NormId::Bounded => (bounded_product, bounded_sum),
            NormId::Einstein => (einstein_product, einstein_sum),
            NormId::Algebraic => (algebraic_product, algebraic_sum),
            NormId::Hamacher => (hamacher_product, hamacher_sum),
            NormId::Minmax => (f64::min, f64::max),
        };
        NormPair { id, tnorm, tconorm }
    }
}

/// Case-insensitive lookup of a norm pair by name.
pub fn resolve_norm(name: &str) -> Result<NormPair> {
    name.parse::<NormId>().map(NormPair::from)
}

fn drastic_product(a: f64, b: f64) -> f64 {
    if a.max(b) == 1.0 {
        a.min(b)
    } else {
        0.0
    }
}

fn drastic_sum(a: f64, b: f64) -> f64 {
    if a.min(b) == 0.0 {
        a.max(b)
    } else {
        1.0
    }
}

fn bounded_product(a: f64, b: f64) -> f64 {
    (a + b - 1.0).max(0.0)
}

fn bounded_sum(a: f64, b: f64) -> f64 {
    (a + b).min(1.0)
}

fn einstein_product(a: f64, b: f64) -> f64 {
    a * b / (2.0 - (a + b - a * b))
}

fn einstein_sum(a: f64, b: f64) -> f64 {
    (a + b) / (1.0 + a * b)
}

fn algebraic_product(a: f64, b: f64) -> f64 {
    a * b
}

fn algebraic_sum(a: f64, b: f64) -> f64 {
    a + b - a * b
}

// The denominator vanishes only at a = b = 0; the limit there is 0.
fn hamacher_product(a: f64, b: f64) -> f64 {
    let denom = a + b - a * b;
    if denom == 0.0 {
        0.0
    } else {
        a * b / denom
    }
}

// Dual of the above: the denominator vanishes only at a = b = 1.
fn hamacher_sum(a: f64, b: f64) -> f64 {
    let denom = 1.0 - a * b;
    if denom == 0.0 {
        1.0
    } else {
        (a + b - 2.0 * a * b) / denom
    }
}
