use crate::MtfpError;

/// Sociometric matrix: the answers of a choose/omit/reject survey.
///
/// Entry `(i, j)` is the value individual `i` assigned to individual `j`:
/// `+1` chose, `0` omitted, `-1` rejected. The main diagonal is zero
/// (self-evaluations are not allowed) and the matrix need not be symmetric.
///
/// Constructors only enforce shape (square, at least 1x1); domain invariants
/// (entry range, zero diagonal) are checked by
/// [`validate_instance`](crate::validate_instance) so that malformed data can
/// be loaded, diagnosed, and reported in full.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SociometricMatrix {
    n: usize,
    values: Vec<i8>, // row-major n x n
}

impl SociometricMatrix {
    /// Builds a matrix from rows. Errors if rows are ragged or the grid is
    /// not square.
    pub fn from_rows(rows: Vec<Vec<i8>>) -> Result<Self, MtfpError> {
        let n = rows.len();
        if n == 0 {
            return Err(MtfpError::EmptyGrid("sociometric matrix has no rows"));
        }
        let mut values = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(MtfpError::RaggedGrid {
                    row: i,
                    expected: n,
                    found: row.len(),
                });
            }
            values.extend(row);
        }
        Ok(Self { n, values })
    }

    /// Number of individuals (matrix dimension).
    pub fn n_individuals(&self) -> usize {
        self.n
    }

    /// Value individual `i` assigned to individual `j`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.values[i * self.n + j]
    }

    /// Row-major view of all entries.
    pub fn values(&self) -> &[i8] {
        &self.values
    }

    /// Rows as owned vectors, mainly for serialization.
    pub fn rows(&self) -> impl Iterator<Item = &[i8]> {
        self.values.chunks(self.n)
    }
}

/// Project requirement matrix: how many people each group needs from each
/// department. Rows are departments, columns are groups, entries are
/// non-negative headcounts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RequirementMatrix {
    n_depts: usize,
    n_groups: usize,
    values: Vec<u32>, // row-major n_depts x n_groups
}

impl RequirementMatrix {
    /// Builds a matrix from rows. Errors if the grid is empty or ragged.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self, MtfpError> {
        let n_depts = rows.len();
        if n_depts == 0 {
            return Err(MtfpError::EmptyGrid("requirement matrix has no rows"));
        }
        let n_groups = rows[0].len();
        if n_groups == 0 {
            return Err(MtfpError::EmptyGrid("requirement matrix has no columns"));
        }
        let mut values = Vec::with_capacity(n_depts * n_groups);
        for (j, row) in rows.into_iter().enumerate() {
            if row.len() != n_groups {
                return Err(MtfpError::RaggedGrid {
                    row: j,
                    expected: n_groups,
                    found: row.len(),
                });
            }
            values.extend(row);
        }
        Ok(Self {
            n_depts,
            n_groups,
            values,
        })
    }

    /// All-zero matrix of the given shape.
    pub fn zeros(n_depts: usize, n_groups: usize) -> Self {
        Self {
            n_depts,
            n_groups,
            values: vec![0; n_depts * n_groups],
        }
    }

    /// Number of departments (rows).
    pub fn n_departments(&self) -> usize {
        self.n_depts
    }

    /// Number of groups (columns).
    pub fn n_groups(&self) -> usize {
        self.n_groups
    }

    /// Headcount group `k` needs from department `j`.
    #[inline]
    pub fn get(&self, dept: usize, group: usize) -> u32 {
        self.values[dept * self.n_groups + group]
    }

    pub(crate) fn add_one(&mut self, dept: usize, group: usize) {
        self.values[dept * self.n_groups + group] += 1;
    }

    /// Total headcount of department `j` (row sum).
    pub fn department_size(&self, dept: usize) -> u32 {
        self.values[dept * self.n_groups..(dept + 1) * self.n_groups]
            .iter()
            .sum()
    }

    /// Total headcount over all cells; equals the number of individuals in a
    /// consistent instance.
    pub fn total(&self) -> u64 {
        self.values.iter().map(|&v| u64::from(v)).sum()
    }

    /// Row-major view of all entries.
    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Rows as slices, mainly for serialization.
    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.values.chunks(self.n_groups)
    }
}
