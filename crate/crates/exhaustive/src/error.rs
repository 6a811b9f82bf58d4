use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExhaustiveError {
    /// The instance failed domain validation.
    #[error(transparent)]
    InvalidInstance(#[from] mtfp_core::MtfpError),

    /// The feasible count exceeds the evaluation budget; enumeration was
    /// refused before starting.
    #[error("feasible count {feasible_count} exceeds evaluation budget {budget}")]
    BudgetExceeded {
        feasible_count: BigUint,
        budget: u64,
    },

    /// No feasible allocation exists. Unreachable for validated instances,
    /// whose requirement row sums always admit at least one allocation.
    #[error("instance has no feasible allocation")]
    NoFeasibleAllocation,
}
