use thiserror::Error;

use crate::validate::Violation;

/// Errors reported by the core arithmetic and constructors.
#[derive(Debug, Error)]
pub enum MtfpError {
    /// Two inputs disagree on a dimension (e.g. allocation length vs. matrix
    /// size, or requirement grids of different shapes).
    #[error("dimension mismatch: {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    /// A grid constructor received rows of unequal length.
    #[error("ragged grid: row {row} has {found} cells, expected {expected}")]
    RaggedGrid {
        row: usize,
        expected: usize,
        found: usize,
    },

    /// A grid constructor received no rows or no columns.
    #[error("empty grid: {0}")]
    EmptyGrid(&'static str),

    /// An allocation refers to a group index outside the instance's range.
    #[error("group index {group} out of range for individual {individual} (instance has {n_groups} groups)")]
    GroupIndexOutOfRange {
        individual: usize,
        group: usize,
        n_groups: usize,
    },

    /// An instance failed domain validation; all violations are listed.
    #[error("invalid instance: {}", format_violations(.0))]
    InvalidInstance(Vec<Violation>),
}

fn format_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
