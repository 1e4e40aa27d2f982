//! JSON interchange for matrices and decision outcomes.
//!
//! A matrix document is
//!
//! ```json
//! {
//!   "universe": ["u1", "u2"],
//!   "parameters": ["x1", "x2"],
//!   "entries": [
//!     [[0.7, 0.6, 0.7], [0.5, 0.7, 0.8]],
//!     [[0.4, 0.2, 0.8], [0.5, 0.9, 0.3]]
//!   ]
//! }
//! ```
//!
//! with `entries` row-major (one row per universe object) and each cell a
//! `[T, I, F]` triple. The same document is read as a soft set through
//! [`NsMatrix::to_soft_set`].

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::decision::DecisionOutcome;
use crate::error::{Error, Result};
use crate::labels::Labels;
use crate::matrix::NsMatrix;
use crate::value::NsValue;

/// Raw, unvalidated form of a matrix file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDocument {
    pub universe: Vec<String>,
    pub parameters: Vec<String>,
    pub entries: Vec<Vec<Vec<f64>>>,
}

impl From<&NsMatrix> for MatrixDocument {
    fn from(m: &NsMatrix) -> Self {
        MatrixDocument {
            universe: m.row_labels().as_slice().to_vec(),
            parameters: m.col_labels().as_slice().to_vec(),
            entries: (0..m.rows())
                .map(|i| m.row(i).iter().map(|v| v.components().to_vec()).collect())
                .collect(),
        }
    }
}

impl TryFrom<MatrixDocument> for NsMatrix {
    type Error = Error;

    fn try_from(doc: MatrixDocument) -> Result<Self> {
        let universe = Labels::new(doc.universe)?;
        let parameters = Labels::new(doc.parameters)?;
        if doc.entries.len() != universe.len() {
            return Err(Error::DimensionMismatch {
                expected: format!("{} entry rows (one per universe label)", universe.len()),
                found: format!("{} entry rows", doc.entries.len()),
            });
        }
        let mut rows = Vec::with_capacity(universe.len());
        for (i, row) in doc.entries.into_iter().enumerate() {
            if row.len() != parameters.len() {
                return Err(Error::DimensionMismatch {
                    expected: format!(
                        "{} cells in row `{}` (one per parameter)",
                        parameters.len(),
                        &universe[i]
                    ),
                    found: format!("{} cells", row.len()),
                });
            }
            let mut cells = Vec::with_capacity(row.len());
            for (j, cell) in row.into_iter().enumerate() {
                let [t, ind, f]: [f64; 3] = cell.as_slice().try_into().map_err(|_| {
                    Error::DimensionMismatch {
                        expected: format!(
                            "3 components in cell ({}, {})",
                            &universe[i], &parameters[j]
                        ),
                        found: format!("{} components", cell.len()),
                    }
                })?;
                for (component, value) in [('T', t), ('I', ind), ('F', f)] {
                    if !(0.0..=1.0).contains(&value) {
                        return Err(Error::InvalidCell {
                            row: universe[i].to_string(),
                            column: parameters[j].to_string(),
                            component,
                            value,
                        });
                    }
                }
                cells.push(NsValue::new(t, ind, f)?);
            }
            rows.push(cells);
        }
        NsMatrix::new(universe, parameters, rows)
    }
}

/// Parses and validates a matrix document.
pub fn parse_matrix(document: &str) -> Result<NsMatrix> {
    let doc: MatrixDocument =
        serde_json::from_str(document).map_err(|e| Error::Json(e.to_string()))?;
    NsMatrix::try_from(doc)
}

/// Writes a matrix document, one matrix row per line. Numbers use the
/// shortest decimal form that parses back to the same value.
pub fn matrix_to_json(m: &NsMatrix) -> String {
    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"universe\": {},", string_list(m.row_labels()));
    let _ = writeln!(out, "  \"parameters\": {},", string_list(m.col_labels()));
    out.push_str("  \"entries\": [\n");
    for i in 0..m.rows() {
        let cells: Vec<String> = m
            .row(i)
            .iter()
            .map(|v| {
                let [t, ind, f] = v.components().map(number);
                format!("[{t}, {ind}, {f}]")
            })
            .collect();
        let sep = if i + 1 < m.rows() { "," } else { "" };
        let _ = writeln!(out, "    [{}]{sep}", cells.join(", "));
    }
    out.push_str("  ]\n}\n");
    out
}

fn string_list(labels: &Labels) -> String {
    let quoted: Vec<String> = labels.iter().map(quote).collect();
    format!("[{}]", quoted.join(", "))
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

fn number(x: f64) -> String {
    serde_json::to_string(&x).expect("finite")
}

fn fixed(x: f64, precision: usize) -> String {
    format!("{x:.precision$}")
}

/// Decision outcome as JSON, numbers rounded to `precision` decimals.
pub fn outcome_to_json(outcome: &DecisionOutcome, precision: usize) -> String {
    let mut out = String::from("{\n  \"scores\": [\n");
    let n = outcome.per_object.len();
    for (k, o) in outcome.per_object.iter().enumerate() {
        let [mu, nu, w] = o.triple.components().map(|x| fixed(x, precision));
        let sep = if k + 1 < n { "," } else { "" };
        let _ = writeln!(
            out,
            "    {{\"object\": {}, \"d\": [{mu}, {nu}, {w}], \"s\": {}}}{sep}",
            quote(&o.object),
            fixed(o.score, precision)
        );
    }
    out.push_str("  ],\n  \"optimum\": [\n");
    let n = outcome.optimum.len();
    for (k, (object, s)) in outcome.optimum.iter().enumerate() {
        let sep = if k + 1 < n { "," } else { "" };
        let _ = writeln!(
            out,
            "    {{\"object\": {}, \"s\": {}}}{sep}",
            quote(object),
            fixed(*s, precision)
        );
    }
    out.push_str("  ]\n}\n");
    out
}

/// Decision outcome as a fixed-width text table in universe order.
pub fn outcome_to_table(outcome: &DecisionOutcome, precision: usize) -> String {
    let header = ["object", "mu", "nu", "w", "s"];
    let rows: Vec<[String; 5]> = outcome
        .per_object
        .iter()
        .map(|o| {
            let [mu, nu, w] = o.triple.components().map(|x| fixed(x, precision));
            [o.object.clone(), mu, nu, w, fixed(o.score, precision)]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }

    let mut out = String::new();
    let mut line = |cells: [&str; 5]| {
        let mut text = String::new();
        for (k, (cell, w)) in cells.iter().zip(widths).enumerate() {
            let pad = w - cell.chars().count();
            if k == 0 {
                text.push_str(cell);
                text.extend(std::iter::repeat_n(' ', pad));
            } else {
                text.push_str("  ");
                text.extend(std::iter::repeat_n(' ', pad));
                text.push_str(cell);
            }
        }
        out.push_str(text.trim_end());
        out.push('\n');
    };
    line(header);
    for row in &rows {
        line(row.each_ref().map(String::as_str));
    }

    let best: Vec<String> = outcome
        .optimum
        .iter()
        .map(|(object, s)| format!("{object}/{}", fixed(*s, precision)))
        .collect();
    let _ = writeln!(out, "optimum: {{{}}}", best.join(", "));
    out
}
