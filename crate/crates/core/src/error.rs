// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring specification: {0}")]
    InvalidSpec(String),

    #[error("mixed-level arithmetic")]
    MixedLevel,

    #[error("not a unit: {0}")]
    NotAUnit(u64),

    #[error("not in the image of chi: {0} is not divisible by p^(s-r)")]
    NotInChiImage(u64),

    #[error("row {row} not in R^alpha x theta^(s-r) R^beta (column {col})")]
    BlockValuation { row: usize, col: usize },

    #[error("nonsingularity requires a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("parity-check formula requires weakly-free code (type {0})")]
    NotWeaklyFree(String),

    #[error("enumeration budget: {needed} exceeds {budget}")]
    EnumerationBudget { needed: u128, budget: u64 },

    #[error("security parameter defined for LCP pairs only")]
    NotLcp,

    #[error("not a group code with respect to the given groups")]
    NotGroupCode,

    #[error("group element index {index} out of range for order {order}")]
    GroupIndex { index: usize, order: usize },

    #[error("product split failed on a verified group code: {0}")]
    SplitFailed(String),

    #[error("{path}: {message}")]
    Input { path: String, message: String },
}
