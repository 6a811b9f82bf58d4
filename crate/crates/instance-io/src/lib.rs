//! Reading, writing, and random generation of MTFP problem instances.
//!
//! # The `.mtfp` document format
//!
//! An instance is a single human-readable text document:
//!
//! ```text
//! # MTFP problem instance
//! name: dataset1
//! individuals: 10
//! departments: 4
//! groups: 3
//!
//! [departments]
//! 1 1 1 1 2 2 2 3 3 4
//!
//! [requirements]
//! 2 2 0
//! 2 1 0
//! 0 1 1
//! 0 0 1
//!
//! [sociometric]
//!  0  1  0  0  1 -1  1  1  1 -1
//!  ...
//! ```
//!
//! - `#` starts a comment that runs to the end of the line; blank lines are
//!   ignored.
//! - The four header fields may appear in any order but must precede the
//!   sections.
//! - `[departments]` lists one 1-based department index per individual.
//! - `[requirements]` is the departments x groups headcount grid, row-major.
//! - `[sociometric]` is the individuals x individuals grid of -1/0/+1
//!   survey answers, row-major.
//! - Cells are separated by whitespace and/or commas; sections may appear in
//!   any order and wrap lines freely.
//!
//! [`save_instance`] emits the canonical form shown above (fixed field
//! order, cells right-aligned per section, single trailing newline), so
//! saving the same instance twice is byte-identical. Loading validates with
//! [`mtfp_core::validate_instance`] and reports *all* violations, not just
//! the first.

mod document;
mod error;
mod generate;

pub mod datasets;

pub use document::{
    load_instance, load_instance_from_path, parse_instance, save_instance, save_instance_to_string,
};
pub use error::InstanceIoError;
pub use generate::{
    generate_instance, GeneratorConfig, DEFAULT_NEGATIVE_RATE, DEFAULT_POSITIVE_RATE,
};

/// Conventional file extension for instance documents.
pub const FILE_EXTENSION: &str = "mtfp";
