use mtfp_core::ProblemInstance;
use num_bigint::BigUint;

use crate::ExhaustiveError;

/// Number of distinct feasible allocations, in exact integer arithmetic:
/// the product over departments of the multinomial coefficient of that
/// department's requirement row.
///
/// Each department chooses independently which of its members fill which
/// group quota, and a department of size `s` with quotas `y_1..y_k` has
/// `s! / (y_1! ... y_k!)` distinct ways of doing so.
pub fn count_feasible(instance: &ProblemInstance) -> Result<BigUint, ExhaustiveError> {
    let mut count = BigUint::from(1u32);
    for dept in 0..instance.n_departments() {
        let row: Vec<u32> = (0..instance.n_groups())
            .map(|k| instance.req.get(dept, k))
            .collect();
        count *= multinomial(&row);
    }
    Ok(count)
}

/// Multinomial coefficient `(sum parts)! / prod(part!)`, computed as a
/// product of binomials so every intermediate value stays integral.
fn multinomial(parts: &[u32]) -> BigUint {
    let mut result = BigUint::from(1u32);
    let mut remaining: u64 = parts.iter().map(|&p| u64::from(p)).sum();
    for &part in parts {
        result *= binomial(remaining, u64::from(part));
        remaining -= u64::from(part);
    }
    result
}

fn binomial(n: u64, k: u64) -> BigUint {
    let k = k.min(n - k.min(n));
    let mut result = BigUint::from(1u32);
    for i in 0..k {
        result = result * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    result
}
