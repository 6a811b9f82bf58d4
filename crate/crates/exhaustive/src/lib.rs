//! Exact solver for the multiple team formation problem.
//!
//! Enumerates exactly the allocations that satisfy the requirement matrix —
//! per department, every distinct way of filling that department's group
//! quotas, combined across departments — scores each one with the general
//! cohesion objective, and returns the provable optimum. Doubles as the
//! oracle the genetic algorithm is validated against.
//!
//! The number of feasible allocations grows combinatorially, so
//! [`solve_exact`] refuses instances whose feasible count exceeds an
//! evaluation budget (default [`DEFAULT_EVALUATION_BUDGET`]) instead of
//! running for hours; the refusal carries the count so callers can decide.

mod count;
mod enumerate;
mod error;

use std::time::Instant;

use mtfp_core::{general_cohesion, validate_instance, Allocation, ProblemInstance};
use num_bigint::BigUint;

pub use count::count_feasible;
pub use enumerate::{next_permutation, FeasibleAllocations};
pub use error::ExhaustiveError;

/// Default cap on the number of allocations [`solve_exact`] will score.
pub const DEFAULT_EVALUATION_BUDGET: u64 = 100_000_000;

/// Outcome of a completed exhaustive solve.
#[derive(Debug, Clone)]
pub struct ExactResult {
    /// The first optimum in enumeration order.
    pub best_allocation: Allocation,
    /// Maximum general cohesion over all feasible allocations.
    pub best_cohesion: f64,
    /// Number of feasible allocations (all of them were scored).
    pub feasible_count: u64,
    /// Objective evaluations performed; equals `feasible_count`.
    pub evaluations: u64,
    /// Wall-clock time of the enumeration and scoring loop.
    pub elapsed: std::time::Duration,
}

/// Scores every feasible allocation and returns the maximum-cohesion one.
///
/// Ties are broken by enumeration order (the first maximum is kept), so
/// reruns are stable. `budget` defaults to [`DEFAULT_EVALUATION_BUDGET`];
/// when the feasible count exceeds it the solve refuses up front with
/// [`ExhaustiveError::BudgetExceeded`] carrying the count.
pub fn solve_exact(
    instance: &ProblemInstance,
    budget: Option<u64>,
) -> Result<ExactResult, ExhaustiveError> {
    let violations = validate_instance(instance);
    if !violations.is_empty() {
        return Err(ExhaustiveError::InvalidInstance(
            mtfp_core::MtfpError::InvalidInstance(violations),
        ));
    }

    let budget = budget.unwrap_or(DEFAULT_EVALUATION_BUDGET);
    let count = count_feasible(instance)?;
    if count > BigUint::from(budget) {
        return Err(ExhaustiveError::BudgetExceeded {
            feasible_count: count,
            budget,
        });
    }

    let start = Instant::now();
    let mut best: Option<(Allocation, f64)> = None;
    let mut evaluations = 0u64;
    for alloc in FeasibleAllocations::new(instance) {
        let cohesion = general_cohesion(&alloc, instance)?;
        evaluations += 1;
        match &best {
            Some((_, best_cohesion)) if cohesion <= *best_cohesion => {}
            _ => best = Some((alloc, cohesion)),
        }
    }
    let elapsed = start.elapsed();

    let (best_allocation, best_cohesion) =
        best.ok_or(ExhaustiveError::NoFeasibleAllocation)?;
    Ok(ExactResult {
        best_allocation,
        best_cohesion,
        feasible_count: evaluations,
        evaluations,
        elapsed,
    })
}
