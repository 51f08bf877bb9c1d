//! Finite groups as Cayley tables and the reduced-word model of their free
//! product.

mod finite;
pub mod library;
mod word;

use thiserror::Error;

pub use finite::{FiniteGroup, GroupSpec, DEFAULT_CLOSURE_CAP};
pub use word::{FreeProduct, LabelledSyllable, ReducedWords, Side, Syllable, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("a group needs at least one element")]
    Empty,
    #[error("{labels} labels for a table of order {order}")]
    LabelCount { labels: usize, order: usize },
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("table row {row} has {len} entries, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("table entry {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("table is not a Latin square: {0}")]
    NotLatin(String),
    #[error("table has no identity element")]
    NoIdentity,
    #[error("table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("generator {generator} is not a permutation: {reason}")]
    BadPermutation { generator: usize, reason: String },
    #[error("permutation closure exceeds {cap} elements")]
    ClosureCap { cap: usize },
    #[error("no element labelled {label:?} in factor {side}")]
    UnknownLabel { side: Side, label: String },
}
