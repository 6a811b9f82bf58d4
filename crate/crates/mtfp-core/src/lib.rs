//! Data model and objective arithmetic for the Multiple Team Formation
//! Problem (MTFP).
//!
//! The MTFP asks for an assignment of `n_i` individuals to `n_k` groups that
//! maximizes *general cohesion* — the size-weighted sum of per-group
//! sociometric cohesion — subject to a requirement matrix that prescribes how
//! many people each group needs from each department.
//!
//! This crate holds the problem input ([`ProblemInstance`]), candidate
//! solutions ([`Allocation`]), and every objective/penalty computation. All
//! functions here are pure and deterministic: no randomness, no I/O, safe to
//! call concurrently on shared instances.
//!
//! Indices are 0-based throughout; presentation layers render individuals,
//! departments, and groups 1-based.

mod cohesion;
#[cfg(test)]
mod cohesion_tests;
mod error;
mod instance;
mod matrix;
mod validate;

pub use cohesion::{
    derived_requirements, fitness, general_cohesion, group_cohesion, is_feasible, penalty,
};
pub use error::MtfpError;
pub use instance::{Allocation, DepartmentAssignment, ProblemInstance};
pub use matrix::{RequirementMatrix, SociometricMatrix};
pub use validate::{validate_instance, Violation};
