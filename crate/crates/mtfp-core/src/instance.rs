use crate::{validate_instance, MtfpError, RequirementMatrix, SociometricMatrix};

/// Maps each individual to the department they belong to (0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepartmentAssignment {
    dept_of: Vec<usize>,
}

impl DepartmentAssignment {
    pub fn new(dept_of: Vec<usize>) -> Self {
        Self { dept_of }
    }

    /// Builds the assignment where the first `sizes[0]` individuals belong to
    /// department 0, the next `sizes[1]` to department 1, and so on.
    pub fn sequential(sizes: &[u32]) -> Self {
        let mut dept_of = Vec::new();
        for (dept, &size) in sizes.iter().enumerate() {
            dept_of.extend(std::iter::repeat_n(dept, size as usize));
        }
        Self { dept_of }
    }

    pub fn n_individuals(&self) -> usize {
        self.dept_of.len()
    }

    /// Department of individual `i`.
    #[inline]
    pub fn department_of(&self, individual: usize) -> usize {
        self.dept_of[individual]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.dept_of
    }
}

/// A complete MTFP input: who evaluates whom, which group needs how many
/// people from which department, and who belongs where.
///
/// Construction does not validate domain invariants; call
/// [`validate_instance`] or use [`ProblemInstance::validated`] to reject
/// inconsistent data with a full violation report.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemInstance {
    pub name: String,
    pub socio: SociometricMatrix,
    pub req: RequirementMatrix,
    pub depts: DepartmentAssignment,
}

impl ProblemInstance {
    pub fn new(
        name: impl Into<String>,
        socio: SociometricMatrix,
        req: RequirementMatrix,
        depts: DepartmentAssignment,
    ) -> Self {
        Self {
            name: name.into(),
            socio,
            req,
            depts,
        }
    }

    /// Like [`ProblemInstance::new`] but rejects any instance that fails
    /// domain validation, reporting every violation.
    pub fn validated(
        name: impl Into<String>,
        socio: SociometricMatrix,
        req: RequirementMatrix,
        depts: DepartmentAssignment,
    ) -> Result<Self, MtfpError> {
        let instance = Self::new(name, socio, req, depts);
        let violations = validate_instance(&instance);
        if violations.is_empty() {
            Ok(instance)
        } else {
            Err(MtfpError::InvalidInstance(violations))
        }
    }

    pub fn n_individuals(&self) -> usize {
        self.socio.n_individuals()
    }

    pub fn n_departments(&self) -> usize {
        self.req.n_departments()
    }

    pub fn n_groups(&self) -> usize {
        self.req.n_groups()
    }
}

/// A candidate solution: the group each individual is assigned to (0-based).
///
/// This is the dense 0/1 allocation matrix collapsed to one group index per
/// row, so "each individual belongs to exactly one group" holds by
/// construction; only the requirement-matrix constraint can be violated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Allocation {
    group_of: Vec<usize>,
}

impl Allocation {
    pub fn new(group_of: Vec<usize>) -> Self {
        Self { group_of }
    }

    pub fn n_individuals(&self) -> usize {
        self.group_of.len()
    }

    /// Group of individual `i`.
    #[inline]
    pub fn group_of(&self, individual: usize) -> usize {
        self.group_of[individual]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.group_of
    }

    /// Individuals assigned to `group`, in ascending order.
    pub fn members_of(&self, group: usize) -> Vec<usize> {
        (0..self.group_of.len())
            .filter(|&i| self.group_of[i] == group)
            .collect()
    }

    /// Member lists for groups `0..n_groups`. Errors if any individual is
    /// assigned to a group outside that range.
    pub fn members_by_group(&self, n_groups: usize) -> Result<Vec<Vec<usize>>, MtfpError> {
        let mut members = vec![Vec::new(); n_groups];
        for (individual, &group) in self.group_of.iter().enumerate() {
            if group >= n_groups {
                return Err(MtfpError::GroupIndexOutOfRange {
                    individual,
                    group,
                    n_groups,
                });
            }
            members[group].push(individual);
        }
        Ok(members)
    }
}
