use std::fmt;

use crate::ProblemInstance;

/// A single invariant violation found by [`validate_instance`], naming the
/// offending field and index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Sociometric entry outside {-1, 0, +1}.
    SocioEntryOutOfRange { row: usize, col: usize, value: i8 },
    /// Non-zero value on the sociometric main diagonal.
    SocioDiagonalNonZero { index: usize, value: i8 },
    /// Department assignment length differs from the sociometric dimension.
    DepartmentCountMismatch { expected: usize, found: usize },
    /// An individual's department index is outside the requirement rows.
    DepartmentIndexOutOfRange {
        individual: usize,
        dept: usize,
        n_departments: usize,
    },
    /// Requirement cells sum to something other than the individual count.
    RequirementTotalMismatch { total: u64, n_individuals: usize },
    /// A department's member count differs from its requirement row sum.
    DepartmentSizeMismatch {
        dept: usize,
        members: usize,
        row_sum: u32,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SocioEntryOutOfRange { row, col, value } => write!(
                f,
                "sociometric entry ({}, {}) is {value}, must be -1, 0 or +1",
                row + 1,
                col + 1
            ),
            Violation::SocioDiagonalNonZero { index, value } => write!(
                f,
                "sociometric diagonal entry ({0}, {0}) is {value}, must be 0 (self-evaluations are not allowed)",
                index + 1
            ),
            Violation::DepartmentCountMismatch { expected, found } => write!(
                f,
                "department assignment lists {found} individuals, sociometric matrix has {expected}"
            ),
            Violation::DepartmentIndexOutOfRange {
                individual,
                dept,
                n_departments,
            } => write!(
                f,
                "individual {} is assigned to department {}, but the requirement matrix has only {n_departments} departments",
                individual + 1,
                dept + 1
            ),
            Violation::RequirementTotalMismatch {
                total,
                n_individuals,
            } => write!(
                f,
                "requirement matrix cells sum to {total}, but the instance has {n_individuals} individuals"
            ),
            Violation::DepartmentSizeMismatch {
                dept,
                members,
                row_sum,
            } => write!(
                f,
                "department {} has {members} members, but its requirement row sums to {row_sum}",
                dept + 1
            ),
        }
    }
}

/// Checks every domain invariant of an instance and returns all violations
/// found (empty means the instance is consistent).
///
/// Checked invariants:
/// - sociometric entries are in {-1, 0, +1} with a zero diagonal;
/// - the department assignment covers exactly the matrix's individuals and
///   refers only to existing departments;
/// - requirement cells sum to the individual count (everyone is allocated
///   exactly once);
/// - each department's member count equals its requirement row sum.
pub fn validate_instance(instance: &ProblemInstance) -> Vec<Violation> {
    let mut violations = Vec::new();
    let n = instance.socio.n_individuals();

    for i in 0..n {
        for j in 0..n {
            let value = instance.socio.get(i, j);
            if i == j {
                if value != 0 {
                    violations.push(Violation::SocioDiagonalNonZero { index: i, value });
                }
            } else if !(-1..=1).contains(&value) {
                violations.push(Violation::SocioEntryOutOfRange {
                    row: i,
                    col: j,
                    value,
                });
            }
        }
    }

    if instance.depts.n_individuals() != n {
        violations.push(Violation::DepartmentCountMismatch {
            expected: n,
            found: instance.depts.n_individuals(),
        });
    }

    let n_depts = instance.req.n_departments();
    for (individual, &dept) in instance.depts.as_slice().iter().enumerate() {
        if dept >= n_depts {
            violations.push(Violation::DepartmentIndexOutOfRange {
                individual,
                dept,
                n_departments: n_depts,
            });
        }
    }

    let total = instance.req.total();
    if total != n as u64 {
        violations.push(Violation::RequirementTotalMismatch {
            total,
            n_individuals: n,
        });
    }

    // Member counts per department; out-of-range indices were reported above.
    let mut member_counts = vec![0usize; n_depts];
    for &dept in instance.depts.as_slice() {
        if dept < n_depts {
            member_counts[dept] += 1;
        }
    }
    for (dept, &members) in member_counts.iter().enumerate() {
        let row_sum = instance.req.department_size(dept);
        if members != row_sum as usize {
            violations.push(Violation::DepartmentSizeMismatch {
                dept,
                members,
                row_sum,
            });
        }
    }

    violations
}
