use mtfp_core::{Allocation, ProblemInstance};

/// Advances `a` to its next permutation in lexicographic order. Returns
/// `false` (leaving `a` reversed back to ascending order would be up to the
/// caller) when `a` was already the last permutation.
pub fn next_permutation<T: Ord>(a: &mut [T]) -> bool {
    if a.len() < 2 {
        return false;
    }
    // Longest non-increasing suffix; pivot is the element before it.
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let pivot = i - 1;
    let mut j = a.len() - 1;
    while a[j] <= a[pivot] {
        j -= 1;
    }
    a.swap(pivot, j);
    a[i..].reverse();
    true
}

/// Iterator over every allocation satisfying the requirement matrix, each
/// exactly once, in deterministic order.
///
/// For each department the group-label multiset dictated by its requirement
/// row is permuted over the department's members (sorted by individual
/// index) in lexicographic order; departments combine odometer-style with
/// department 0 as the most significant digit.
pub struct FeasibleAllocations<'a> {
    instance: &'a ProblemInstance,
    /// Members of each department, ascending.
    dept_members: Vec<Vec<usize>>,
    /// Current group-label permutation per department.
    labels: Vec<Vec<usize>>,
    done: bool,
}

impl<'a> FeasibleAllocations<'a> {
    pub fn new(instance: &'a ProblemInstance) -> Self {
        let n_depts = instance.n_departments();
        let mut dept_members = vec![Vec::new(); n_depts];
        for (individual, &dept) in instance.depts.as_slice().iter().enumerate() {
            dept_members[dept].push(individual);
        }
        // First permutation: group labels ascending per quota row.
        let labels = (0..n_depts)
            .map(|dept| {
                let mut row_labels = Vec::new();
                for group in 0..instance.n_groups() {
                    let quota = instance.req.get(dept, group) as usize;
                    row_labels.extend(std::iter::repeat_n(group, quota));
                }
                row_labels
            })
            .collect();
        Self {
            instance,
            dept_members,
            labels,
            done: false,
        }
    }

    fn compose(&self) -> Allocation {
        let mut group_of = vec![0usize; self.instance.n_individuals()];
        for (dept, members) in self.dept_members.iter().enumerate() {
            for (pos, &individual) in members.iter().enumerate() {
                group_of[individual] = self.labels[dept][pos];
            }
        }
        Allocation::new(group_of)
    }

    fn advance(&mut self) {
        for dept in (0..self.labels.len()).rev() {
            if next_permutation(&mut self.labels[dept]) {
                return;
            }
            // Wrapped: reset this digit and carry into the next department.
            self.labels[dept].sort_unstable();
        }
        self.done = true;
    }
}

impl Iterator for FeasibleAllocations<'_> {
    type Item = Allocation;

    fn next(&mut self) -> Option<Allocation> {
        if self.done {
            return None;
        }
        let alloc = self.compose();
        self.advance();
        Some(alloc)
    }
}
