use std::fmt;

use crate::error::Result;
use crate::norm::{NormPair, UnitValue};

/// A neutrosophic value: independent truth, indeterminacy and falsity
/// memberships, each in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct NsValue {
    truth: UnitValue,
    indeterminacy: UnitValue,
    falsity: UnitValue,
}

impl NsValue {
    /// The bottom element `(0, 1, 1)`.
    pub const ZERO: NsValue = NsValue {
        truth: UnitValue::ZERO,
        indeterminacy: UnitValue::ONE,
        falsity: UnitValue::ONE,
    };

    /// The top element `(1, 0, 0)`.
    pub const UNIVERSAL: NsValue = NsValue {
        truth: UnitValue::ONE,
        indeterminacy: UnitValue::ZERO,
        falsity: UnitValue::ZERO,
    };

    pub fn new(truth: f64, indeterminacy: f64, falsity: f64) -> Result<Self> {
        Ok(NsValue {
            truth: UnitValue::new(truth)?,
            indeterminacy: UnitValue::new(indeterminacy)?,
            falsity: UnitValue::new(falsity)?,
        })
    }

    pub fn from_units(truth: UnitValue, indeterminacy: UnitValue, falsity: UnitValue) -> Self {
        NsValue {
            truth,
            indeterminacy,
            falsity,
        }
    }

    #[inline]
    pub fn truth(&self) -> f64 {
        self.truth.get()
    }

    #[inline]
    pub fn indeterminacy(&self) -> f64 {
        self.indeterminacy.get()
    }

    #[inline]
    pub fn falsity(&self) -> f64 {
        self.falsity.get()
    }

    pub fn components(&self) -> [f64; 3] {
        [self.truth(), self.indeterminacy(), self.falsity()]
    }

    pub fn units(&self) -> [UnitValue; 3] {
        [self.truth, self.indeterminacy, self.falsity]
    }

    /// `(T, I, F) -> (F, I, T)`.
    pub fn swap_truth_falsity(&self) -> Self {
        NsValue::from_units(self.falsity, self.indeterminacy, self.truth)
    }

    /// `(T, I, F) -> (F, 1 - I, T)`.
    pub fn complement(&self) -> Self {
        NsValue::from_units(self.falsity, self.indeterminacy.complement(), self.truth)
    }

    /// `(s(T), t(I), t(F))`.
    pub fn union(&self, other: &NsValue, pair: &NormPair) -> Self {
        NsValue::from_units(
            pair.tconorm(self.truth, other.truth),
            pair.tnorm(self.indeterminacy, other.indeterminacy),
            pair.tnorm(self.falsity, other.falsity),
        )
    }

    /// `(t(T), s(I), s(F))`.
    pub fn intersection(&self, other: &NsValue, pair: &NormPair) -> Self {
        NsValue::from_units(
            pair.tnorm(self.truth, other.truth),
            pair.tconorm(self.indeterminacy, other.indeterminacy),
            pair.tconorm(self.falsity, other.falsity),
        )
    }

    /// Containment order: more truth, less indeterminacy, less falsity.
    pub fn is_below(&self, other: &NsValue) -> bool {
        self.truth <= other.truth
            && self.indeterminacy >= other.indeterminacy
            && self.falsity >= other.falsity
    }

    pub fn is_zero(&self) -> bool {
        *self == NsValue::ZERO
    }

    /// Largest absolute componentwise difference.
    pub fn max_deviation(&self, other: &NsValue) -> f64 {
        self.components()
            .iter()
            .zip(other.components())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

impl TryFrom<[f64; 3]> for NsValue {
    type Error = crate::error::Error;

    fn try_from([t, i, f]: [f64; 3]) -> Result<Self> {
        NsValue::new(t, i, f)
    }
}

impl fmt::Display for NsValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.truth, self.indeterminacy, self.falsity)
    }
}
