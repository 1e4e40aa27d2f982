use std::collections::HashSet;
use std::ops::Index;

use crate::error::{Error, Result};

/// A non-empty ordered list of distinct text labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Labels(Vec<String>);

/// The objects `u_1 .. u_m` under consideration.
pub type Universe = Labels;

/// The parameters `x_1 .. x_n` describing the objects.
pub type ParameterSet = Labels;

impl Labels {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyLabels);
        }
        let mut seen = HashSet::with_capacity(labels.len());
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Labels(labels))
    }

    /// `prefix1 .. prefixN`, e.g. `u1, u2, u3`.
    pub fn numbered(prefix: &str, count: usize) -> Result<Self> {
        Labels::new((1..=count).map(|k| format!("{prefix}{k}")))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.0.iter().position(|l| l == label)
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }

    pub fn as_slice(&self) -> &[String] {
        &self.0
    }

    /// Same labels, reordered so that position `k` holds `self[order[k]]`.
    pub fn permuted(&self, order: &[usize]) -> Result<Self> {
        Labels::new(order.iter().map(|&k| self.0[k].clone()))
    }
}

impl Index<usize> for Labels {
    type Output = str;

    fn index(&self, index: usize) -> &str {
        &self.0[index]
    }
}

impl<'a> IntoIterator for &'a Labels {
    type Item = &'a String;
    type IntoIter = std::slice::Iter<'a, String>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}
