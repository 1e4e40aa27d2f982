//! And/Or products of neutrosophic soft matrices.
//!
//! Both products pair every column `j` of `A` with every column `k` of `B`
//! (same row `i`) and lay the result out in an `m x n^2` matrix at column
//! `p = n(j - 1) + k` (1-based). The And-product combines with
//! `(t(T), s(I), s(F))`, the Or-product with `(s(T), t(I), t(F))`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::labels::Labels;
use crate::matrix::NsMatrix;
use crate::norm::NormPair;
use crate::value::NsValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductKind {
    #[default]
    And,
    Or,
}

impl ProductKind {
    pub fn name(self) -> &'static str {
        match self {
            ProductKind::And => "and",
            ProductKind::Or => "or",
        }
    }

    fn symbol(self) -> char {
        match self {
            ProductKind::And => '∧',
            ProductKind::Or => '∨',
        }
    }

    fn combine(self, a: &NsValue, b: &NsValue, pair: &NormPair) -> NsValue {
        match self {
            ProductKind::And => a.intersection(b, pair),
            ProductKind::Or => a.union(b, pair),
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProductKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "and" => Ok(ProductKind::And),
            "or" => Ok(ProductKind::Or),
            other => Err(format!("unknown product kind `{other}` (expected and | or)")),
        }
    }
}

/// Position of the pair `(j, k)` in a product matrix, all 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BlockIndex {
    pub j: usize,
    pub k: usize,
    pub p: usize,
}

impl BlockIndex {
    /// `p = n(j - 1) + k`.
    pub fn from_pair(n: usize, j: usize, k: usize) -> Self {
        debug_assert!((1..=n).contains(&j) && (1..=n).contains(&k));
        BlockIndex {
            j,
            k,
            p: n * (j - 1) + k,
        }
    }

    /// Inverse of [`BlockIndex::from_pair`]: `j = ceil(p / n)`,
    /// `k = (p - 1) mod n + 1`.
    pub fn from_column(n: usize, p: usize) -> Self {
        debug_assert!((1..=n * n).contains(&p));
        BlockIndex {
            j: p.div_ceil(n),
            k: (p - 1) % n + 1,
            p,
        }
    }
}

/// `A ∧ B`.
pub fn and_product(a: &NsMatrix, b: &NsMatrix, pair: &NormPair) -> Result<NsMatrix> {
    product(a, b, ProductKind::And, pair)
}

/// `A ∨ B`.
pub fn or_product(a: &NsMatrix, b: &NsMatrix, pair: &NormPair) -> Result<NsMatrix> {
    product(a, b, ProductKind::Or, pair)
}

pub fn product(
    a: &NsMatrix,
    b: &NsMatrix,
    kind: ProductKind,
    pair: &NormPair,
) -> Result<NsMatrix> {
    a.check_shape(b)?;
    let n = a.cols();
    let params = a.col_labels();
    let labels = Labels::new(
        (1..=n * n)
            .map(|p| BlockIndex::from_column(n, p))
            .map(|ix| format!("{}{}{}", &params[ix.j - 1], kind.symbol(), &params[ix.k - 1])),
    )
    // distinct inputs give distinct pair labels unless a label contains the symbol
    .map_err(|e| Error::ShapeMismatch(format!("cannot label product columns: {e}")))?;

    Ok(NsMatrix::from_fn(
        a.row_labels().clone(),
        labels,
        |i, col| {
            let ix = BlockIndex::from_column(n, col + 1);
            kind.combine(&a.get(i, ix.j - 1), &b.get(i, ix.k - 1), pair)
        },
    ))
}
