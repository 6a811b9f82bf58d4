use mtfp_core::Violation;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InstanceIoError {
    #[error(transparent)]
    Io(#[from] std::io::Error),

    /// Structural problem in the document text.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The document parsed but the instance violates domain invariants;
    /// every violation is listed.
    #[error("invalid instance:{}", format_violations(.0))]
    Validation(Vec<Violation>),

    /// The generator configuration cannot produce a consistent instance.
    #[error("invalid generator config: {0}")]
    InvalidConfig(String),

    /// Instance names must be single-line and free of the comment marker to
    /// survive a save/load round trip.
    #[error("instance name {0:?} is not serializable (must be non-empty, single-line, without '#')")]
    InvalidName(String),
}

fn format_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| format!("\n  - {v}"))
        .collect::<String>()
}
