//! Neutrosophic soft sets.
//!
//! A soft set here is total over its parameter set: every parameter maps
//! every object of the universe to a neutrosophic value. Union and
//! intersection are taken cellwise through a [`NormPair`]; complement swaps
//! truth and falsity and, depending on [`ComplementMode`], either keeps or
//! inverts the indeterminacy.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::labels::{ParameterSet, Universe};
use crate::norm::NormPair;
use crate::value::NsValue;

/// How a complement treats the indeterminacy component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComplementMode {
    /// `(T, I, F) -> (F, I, T)`
    IdentityI,
    /// `(T, I, F) -> (F, 1 - I, T)`
    #[default]
    OneMinusI,
}

impl ComplementMode {
    pub fn name(self) -> &'static str {
        match self {
            ComplementMode::IdentityI => "identity_i",
            ComplementMode::OneMinusI => "one_minus_i",
        }
    }

    pub fn apply(self, value: &NsValue) -> NsValue {
        match self {
            ComplementMode::IdentityI => value.swap_truth_falsity(),
            ComplementMode::OneMinusI => value.complement(),
        }
    }
}

impl fmt::Display for ComplementMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ComplementMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "identity_i" => Ok(ComplementMode::IdentityI),
            "one_minus_i" => Ok(ComplementMode::OneMinusI),
            _ => Err(Error::UnknownComplementMode(s.to_string())),
        }
    }
}

/// A neutrosophic soft set over a universe, total over its parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct NsSoftSet {
    universe: Universe,
    parameters: ParameterSet,
    // parameter-major: index = param * |universe| + object
    values: Vec<NsValue>,
}

impl NsSoftSet {
    /// `valuation[j][i]` is the value of object `i` under parameter `j`.
    pub fn new(
        universe: Universe,
        parameters: ParameterSet,
        valuation: Vec<Vec<NsValue>>,
    ) -> Result<Self> {
        if valuation.len() != parameters.len() {
            return Err(Error::DimensionMismatch {
                expected: format!("{} parameter rows", parameters.len()),
                found: format!("{}", valuation.len()),
            });
        }
        let mut values = Vec::with_capacity(parameters.len() * universe.len());
        for (j, approx) in valuation.into_iter().enumerate() {
            if approx.len() != universe.len() {
                return Err(Error::DimensionMismatch {
                    expected: format!(
                        "{} objects under parameter `{}`",
                        universe.len(),
                        &parameters[j]
                    ),
                    found: format!("{}", approx.len()),
                });
            }
            values.extend(approx);
        }
        Ok(NsSoftSet {
            universe,
            parameters,
            values,
        })
    }

    /// Builds a set from `f(parameter_index, object_index)`.
    pub fn from_fn(
        universe: Universe,
        parameters: ParameterSet,
        mut f: impl FnMut(usize, usize) -> NsValue,
    ) -> Self {
        let m = universe.len();
        let values = (0..parameters.len())
            .flat_map(|j| (0..m).map(move |i| (j, i)))
            .map(|(j, i)| f(j, i))
            .collect();
        NsSoftSet {
            universe,
            parameters,
            values,
        }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn parameters(&self) -> &ParameterSet {
        &self.parameters
    }

    /// Value of object `object` under parameter `param` (both indices).
    pub fn value(&self, param: usize, object: usize) -> NsValue {
        self.values[param * self.universe.len() + object]
    }

    /// Value looked up by labels.
    pub fn get(&self, param: &str, object: &str) -> Option<NsValue> {
        let j = self.parameters.position(param)?;
        let i = self.universe.position(object)?;
        Some(self.value(j, i))
    }

    /// The x-approximation: every object's value under parameter `param`.
    pub fn approximation(&self, param: usize) -> &[NsValue] {
        let m = self.universe.len();
        &self.values[param * m..(param + 1) * m]
    }

    /// Cells in parameter order, objects inner.
    pub fn cells(&self) -> impl Iterator<Item = (&str, &str, NsValue)> + '_ {
        let m = self.universe.len();
        self.values
            .iter()
            .enumerate()
            .map(move |(k, v)| (&self.parameters[k / m], &self.universe[k % m], *v))
    }

    pub fn complement(&self, mode: ComplementMode) -> NsSoftSet {
        self.map(|v| mode.apply(v))
    }

    /// Cellwise `(s(T), t(I), t(F))`.
    pub fn union(&self, other: &NsSoftSet, pair: &NormPair) -> Result<NsSoftSet> {
        self.zip_with(other, |a, b| a.union(b, pair))
    }

    /// Cellwise `(t(T), s(I), s(F))`.
    pub fn intersection(&self, other: &NsSoftSet, pair: &NormPair) -> Result<NsSoftSet> {
        self.zip_with(other, |a, b| a.intersection(b, pair))
    }

    /// `T1 <= T2`, `I1 >= I2` and `F1 >= F2` in every cell.
    pub fn is_subset(&self, other: &NsSoftSet) -> Result<bool> {
        self.check_shape(other)?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .all(|(a, b)| a.is_below(b)))
    }

    fn map(&self, f: impl Fn(&NsValue) -> NsValue) -> NsSoftSet {
        NsSoftSet {
            universe: self.universe.clone(),
            parameters: self.parameters.clone(),
            values: self.values.iter().map(f).collect(),
        }
    }

    fn zip_with(
        &self,
        other: &NsSoftSet,
        f: impl Fn(&NsValue, &NsValue) -> NsValue,
    ) -> Result<NsSoftSet> {
        self.check_shape(other)?;
        Ok(NsSoftSet {
            universe: self.universe.clone(),
            parameters: self.parameters.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    fn check_shape(&self, other: &NsSoftSet) -> Result<()> {
        if self.universe != other.universe {
            return Err(Error::ShapeMismatch(
                "soft sets are defined over different universes".into(),
            ));
        }
        if self.parameters != other.parameters {
            return Err(Error::ShapeMismatch(
                "soft sets are defined over different parameter sets".into(),
            ));
        }
        Ok(())
    }
}

/// Free-function form of [`NsSoftSet::complement`].
pub fn set_complement(set: &NsSoftSet, mode: ComplementMode) -> NsSoftSet {
    set.complement(mode)
}

/// Free-function form of [`NsSoftSet::union`].
pub fn set_union(a: &NsSoftSet, b: &NsSoftSet, pair: &NormPair) -> Result<NsSoftSet> {
    a.union(b, pair)
}

/// Free-function form of [`NsSoftSet::intersection`].
pub fn set_intersection(a: &NsSoftSet, b: &NsSoftSet, pair: &NormPair) -> Result<NsSoftSet> {
    a.intersection(b, pair)
}

/// Free-function form of [`NsSoftSet::is_subset`].
pub fn set_subset(a: &NsSoftSet, b: &NsSoftSet) -> Result<bool> {
    a.is_subset(b)
}
