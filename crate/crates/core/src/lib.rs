//! Neutrosophic soft sets and neutrosophic soft matrices.
//!
//! The crate provides
//!
//! - the six classic dual t-norm/t-conorm pairs ([`norm`]),
//! - neutrosophic soft sets with norm-parameterized union and intersection
//!   and two complement conventions ([`soft_set`]),
//! - the matrix view of a soft set with its lattice operations, transpose
//!   and shape classification ([`matrix`]),
//! - And/Or block products ([`product`]),
//! - min-max-max group decision making over a product ([`decision`]),
//! - a JSON document format and the `nsm` command-line tool ([`io`], [`cli`]).
//!
//! ```
//! use nsm::{nsm_decide, parse_matrix, NormId, ProductKind};
//!
//! let a = parse_matrix(r#"{"universe": ["u1", "u2"], "parameters": ["e1"],
//!     "entries": [[[0.9, 0.1, 0.2]], [[0.6, 0.3, 0.3]]]}"#).unwrap();
//! let b = parse_matrix(r#"{"universe": ["u1", "u2"], "parameters": ["e1"],
//!     "entries": [[[0.7, 0.2, 0.1]], [[0.8, 0.1, 0.1]]]}"#).unwrap();
//! let outcome = nsm_decide(&a, &b, ProductKind::And, &NormId::Minmax.pair()).unwrap();
//! assert_eq!(outcome.optimum_labels(), ["u1"]);
//! ```

pub mod cli;
pub mod decision;
pub mod error;
pub mod io;
pub mod labels;
pub mod matrix;
pub mod norm;
pub mod product;
pub mod soft_set;
pub mod value;

pub use decision::{
    active_blocks, dmmm, nsm_decide, optimum, score, ActiveBlocks, DecisionOutcome,
    DecisionTriple, ObjectScore,
};
pub use error::{Error, Result};
pub use io::{matrix_to_json, parse_matrix, MatrixDocument};
pub use labels::{Labels, ParameterSet, Universe};
pub use matrix::{NsMatrix, ShapeReport};
pub use norm::{resolve_norm, NormId, NormPair, UnitValue};
pub use product::{and_product, or_product, product, BlockIndex, ProductKind};
pub use soft_set::{
    set_complement, set_intersection, set_subset, set_union, ComplementMode, NsSoftSet,
};
pub use value::NsValue;
