//! Min-max-max group decision making over product matrices.
//!
//! Given an `m x n^2` product matrix, columns are grouped into `n` blocks of
//! `n` consecutive columns. Block `k` keeps only its *active* columns (those
//! with at least one entry different from the zero triple `(0, 1, 1)`).
//! Per row, each block is reduced to `(min μ, max ν, max w)` over its active
//! columns, or to `(0, 1, 1)` if it has none; the block results are then
//! reduced to `(max μ, max ν, min w)`. Objects are ranked by
//! `s = μ - ν·w` and every maximizer belongs to the optimum set.

use crate::error::{Error, Result};
use crate::labels::Universe;
use crate::matrix::NsMatrix;
use crate::norm::{NormPair, UnitValue};
use crate::product::{product, ProductKind};
use crate::value::NsValue;

/// Aggregated `(μ, ν, w)` of one object.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecisionTriple {
    mu: UnitValue,
    nu: UnitValue,
    w: UnitValue,
}

impl DecisionTriple {
    pub fn new(mu: f64, nu: f64, w: f64) -> Result<Self> {
        Ok(NsValue::new(mu, nu, w)?.into())
    }

    pub fn mu(&self) -> f64 {
        self.mu.get()
    }

    pub fn nu(&self) -> f64 {
        self.nu.get()
    }

    pub fn w(&self) -> f64 {
        self.w.get()
    }

    pub fn components(&self) -> [f64; 3] {
        [self.mu(), self.nu(), self.w()]
    }

    pub fn score(&self) -> f64 {
        score(self)
    }
}

impl From<NsValue> for DecisionTriple {
    fn from(value: NsValue) -> Self {
        let [mu, nu, w] = value.units();
        DecisionTriple { mu, nu, w }
    }
}

impl From<DecisionTriple> for NsValue {
    fn from(d: DecisionTriple) -> Self {
        NsValue::from_units(d.mu, d.nu, d.w)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ObjectScore {
    pub object: String,
    pub triple: DecisionTriple,
    pub score: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecisionOutcome {
    /// One entry per object, in universe order.
    pub per_object: Vec<ObjectScore>,
    /// Every object attaining the maximum score, in universe order.
    pub optimum: Vec<(String, f64)>,
}

impl DecisionOutcome {
    pub fn scores(&self) -> Vec<f64> {
        self.per_object.iter().map(|o| o.score).collect()
    }

    pub fn triples(&self) -> Vec<DecisionTriple> {
        self.per_object.iter().map(|o| o.triple).collect()
    }

    pub fn optimum_labels(&self) -> Vec<&str> {
        self.optimum.iter().map(|(l, _)| l.as_str()).collect()
    }
}

/// Active columns of each block of an `m x n^2` matrix. Column indices are
/// 0-based positions in the product matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActiveBlocks {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl ActiveBlocks {
    /// Block count and block width.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Active columns of block `k` (0-based).
    pub fn block(&self, k: usize) -> &[usize] {
        &self.blocks[k]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[usize]> {
        self.blocks.iter().map(Vec::as_slice)
    }
}

/// `n` such that `n * n == cols`, if any.
fn block_width(cols: usize) -> Result<usize> {
    let mut n = (cols as f64).sqrt().round() as usize;
    while n * n > cols {
        n -= 1;
    }
    while (n + 1) * (n + 1) <= cols {
        n += 1;
    }
    if n >= 1 && n * n == cols {
        Ok(n)
    } else {
        Err(Error::NotBlockSquare(cols))
    }
}

pub fn active_blocks(c: &NsMatrix) -> Result<ActiveBlocks> {
    let n = block_width(c.cols())?;
    let active = |col: usize| (0..c.rows()).any(|i| !c.get(i, col).is_zero());
    let blocks = (0..n)
        .map(|k| (k * n..(k + 1) * n).filter(|&col| active(col)).collect())
        .collect();
    Ok(ActiveBlocks { n, blocks })
}

/// The min-max-max decision column, one triple per row of `c`.
pub fn dmmm(c: &NsMatrix) -> Result<Vec<DecisionTriple>> {
    let blocks = active_blocks(c)?;
    let triples = (0..c.rows())
        .map(|i| {
            let per_block = blocks.iter().map(|cols| {
                if cols.is_empty() {
                    return NsValue::ZERO.units();
                }
                let cells = cols.iter().map(|&col| c.get(i, col).units());
                cells
                    .reduce(|[mu, nu, w], [mu2, nu2, w2]| [min(mu, mu2), max(nu, nu2), max(w, w2)])
                    .expect("non-empty block")
            });
            let [mu, nu, w] = per_block
                .reduce(|[mu, nu, w], [mu2, nu2, w2]| [max(mu, mu2), max(nu, nu2), min(w, w2)])
                .expect("n >= 1 blocks");
            DecisionTriple { mu, nu, w }
        })
        .collect();
    Ok(triples)
}

fn min(a: UnitValue, b: UnitValue) -> UnitValue {
    if b < a {
        b
    } else {
        a
    }
}

fn max(a: UnitValue, b: UnitValue) -> UnitValue {
    if b > a {
        b
    } else {
        a
    }
}

/// `μ - ν·w`, in `[-1, 1]`.
pub fn score(d: &DecisionTriple) -> f64 {
    d.mu() - d.nu() * d.w()
}

pub fn optimum(universe: &Universe, triples: &[DecisionTriple]) -> Result<DecisionOutcome> {
    if triples.len() != universe.len() {
        return Err(Error::LengthMismatch {
            expected: universe.len(),
            found: triples.len(),
        });
    }
    let per_object: Vec<ObjectScore> = universe
        .iter()
        .zip(triples)
        .map(|(object, triple)| ObjectScore {
            object: object.to_string(),
            triple: *triple,
            score: score(triple),
        })
        .collect();
    let best = per_object
        .iter()
        .map(|o| o.score)
        .fold(f64::NEG_INFINITY, f64::max);
    let optimum = per_object
        .iter()
        .filter(|o| o.score == best)
        .map(|o| (o.object.clone(), o.score))
        .collect();
    Ok(DecisionOutcome {
        per_object,
        optimum,
    })
}

/// Product, decision column and optimum set for two decision makers' matrices.
pub fn nsm_decide(
    a: &NsMatrix,
    b: &NsMatrix,
    kind: ProductKind,
    pair: &NormPair,
) -> Result<DecisionOutcome> {
    let c = product(a, b, kind, pair)?;
    let triples = dmmm(&c)?;
    optimum(c.row_labels(), &triples)
}
