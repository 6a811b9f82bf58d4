//! Objective and penalty arithmetic.
//!
//! Cohesion values are double-precision reals; penalties are exact integers.

use crate::{Allocation, MtfpError, ProblemInstance, RequirementMatrix, SociometricMatrix};

fn check_alloc_len(alloc: &Allocation, n: usize, context: &'static str) -> Result<(), MtfpError> {
    if alloc.n_individuals() != n {
        return Err(MtfpError::DimensionMismatch {
            context,
            expected: n,
            found: alloc.n_individuals(),
        });
    }
    Ok(())
}

/// Sum of sociometric values over ordered pairs of distinct members, for a
/// membership list.
fn pair_sum(members: &[usize], socio: &SociometricMatrix) -> i64 {
    let mut sum = 0i64;
    for &i in members {
        for &j in members {
            if i != j {
                sum += i64::from(socio.get(i, j));
            }
        }
    }
    sum
}

fn cohesion_of_members(members: &[usize], socio: &SociometricMatrix) -> f64 {
    // An empty group has no pairs and contributes no cohesion.
    if members.is_empty() {
        return 0.0;
    }
    pair_sum(members, socio) as f64 / members.len() as f64
}

/// Cohesion of one group: the sum of sociometric values over all ordered
/// pairs of distinct members, divided by the member count. Empty groups have
/// cohesion 0.
pub fn group_cohesion(
    alloc: &Allocation,
    socio: &SociometricMatrix,
    group: usize,
) -> Result<f64, MtfpError> {
    check_alloc_len(alloc, socio.n_individuals(), "group_cohesion allocation")?;
    Ok(cohesion_of_members(&alloc.members_of(group), socio))
}

/// General cohesion: the size-weighted sum of group cohesions, with weight
/// `n_ik / n_i` for a group of `n_ik` members. This is the maximization
/// objective.
pub fn general_cohesion(alloc: &Allocation, instance: &ProblemInstance) -> Result<f64, MtfpError> {
    check_alloc_len(
        alloc,
        instance.n_individuals(),
        "general_cohesion allocation",
    )?;
    let n_i = instance.n_individuals() as f64;
    let members = alloc.members_by_group(instance.n_groups())?;
    let mut total = 0.0;
    for group_members in &members {
        let weight = group_members.len() as f64 / n_i;
        total += weight * cohesion_of_members(group_members, &instance.socio);
    }
    Ok(total)
}

/// The requirement matrix an allocation actually realizes: entry `(j, k)`
/// counts the individuals of department `j` placed in group `k`.
pub fn derived_requirements(
    alloc: &Allocation,
    instance: &ProblemInstance,
) -> Result<RequirementMatrix, MtfpError> {
    check_alloc_len(
        alloc,
        instance.n_individuals(),
        "derived_requirements allocation",
    )?;
    let n_groups = instance.n_groups();
    let mut derived = RequirementMatrix::zeros(instance.n_departments(), n_groups);
    for (individual, &group) in alloc.as_slice().iter().enumerate() {
        if group >= n_groups {
            return Err(MtfpError::GroupIndexOutOfRange {
                individual,
                group,
                n_groups,
            });
        }
        derived.add_one(instance.depts.department_of(individual), group);
    }
    Ok(derived)
}

/// Constraint-violation measure: the sum of absolute cell differences between
/// two requirement matrices. Zero iff they are identical.
pub fn penalty(got: &RequirementMatrix, want: &RequirementMatrix) -> Result<u64, MtfpError> {
    if got.n_departments() != want.n_departments() {
        return Err(MtfpError::DimensionMismatch {
            context: "penalty departments",
            expected: want.n_departments(),
            found: got.n_departments(),
        });
    }
    if got.n_groups() != want.n_groups() {
        return Err(MtfpError::DimensionMismatch {
            context: "penalty groups",
            expected: want.n_groups(),
            found: got.n_groups(),
        });
    }
    Ok(got
        .values()
        .iter()
        .zip(want.values())
        .map(|(&a, &b)| u64::from(a.abs_diff(b)))
        .sum())
}

/// Penalized objective: general cohesion minus the requirement-matrix
/// penalty. Equals the general cohesion exactly on feasible allocations.
pub fn fitness(alloc: &Allocation, instance: &ProblemInstance) -> Result<f64, MtfpError> {
    let cohesion = general_cohesion(alloc, instance)?;
    let violation = penalty(&derived_requirements(alloc, instance)?, &instance.req)?;
    Ok(cohesion - violation as f64)
}

/// True iff the allocation meets the requirement matrix exactly.
pub fn is_feasible(alloc: &Allocation, instance: &ProblemInstance) -> Result<bool, MtfpError> {
    Ok(derived_requirements(alloc, instance)? == instance.req)
}
