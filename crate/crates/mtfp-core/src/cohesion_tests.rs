use crate::*;

/// Benchmark instance 1: 10 individuals, 4 departments, 3 groups.
/// Departments are sequential by requirement row sums (4, 3, 2, 1).
pub(crate) fn dataset1() -> ProblemInstance {
    let socio = SociometricMatrix::from_rows(vec![
        vec![0, 1, 0, 0, 1, -1, 1, 1, 1, -1],
        vec![0, 0, 0, 0, 1, 1, 1, 0, -1, 1],
        vec![1, 1, 0, 1, -1, 1, 1, -1, 1, 1],
        vec![1, 1, 1, 0, 0, 1, 1, 1, 1, 1],
        vec![0, 0, -1, -1, 0, 1, 1, 0, 0, 0],
        vec![0, 1, 1, 0, 0, 0, 1, -1, 0, 1],
        vec![1, 1, 0, 0, 0, 0, 0, 1, 1, 0],
        vec![0, 0, 1, 0, 0, 0, 0, 0, 1, 1],
        vec![1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        vec![0, 1, -1, 0, 0, 1, 1, 0, -1, 0],
    ])
    .unwrap();
    let req = RequirementMatrix::from_rows(vec![
        vec![2, 2, 0],
        vec![2, 1, 0],
        vec![0, 1, 1],
        vec![0, 0, 1],
    ])
    .unwrap();
    let depts = DepartmentAssignment::sequential(&[4, 3, 2, 1]);
    ProblemInstance::validated("dataset1", socio, req, depts).unwrap()
}

/// The known optimal allocation of dataset 1:
/// G1 = {I1, I2, I5, I7}, G2 = {I3, I4, I6, I9}, G3 = {I8, I10}.
pub(crate) fn dataset1_optimal_allocation() -> Allocation {
    Allocation::new(vec![0, 0, 1, 1, 0, 1, 0, 2, 1, 2])
}

fn zero_socio(n: usize) -> SociometricMatrix {
    SociometricMatrix::from_rows(vec![vec![0; n]; n]).unwrap()
}

#[test]
fn group_cohesion_dataset1_group1() {
    let instance = dataset1();
    let alloc = dataset1_optimal_allocation();
    let e1 = group_cohesion(&alloc, &instance.socio, 0).unwrap();
    assert!((e1 - 2.0).abs() < 1e-12, "got {e1}");
}

#[test]
fn group_cohesion_dataset1_group3() {
    let instance = dataset1();
    let alloc = dataset1_optimal_allocation();
    let e3 = group_cohesion(&alloc, &instance.socio, 2).unwrap();
    assert!((e3 - 0.5).abs() < 1e-12, "got {e3}");
}

#[test]
fn group_cohesion_zero_matrix() {
    let socio = zero_socio(5);
    let alloc = Allocation::new(vec![0, 1, 0, 1, 0]);
    for group in 0..2 {
        assert_eq!(group_cohesion(&alloc, &socio, group).unwrap(), 0.0);
    }
}

#[test]
fn group_cohesion_empty_group_is_zero() {
    let instance = dataset1();
    let alloc = dataset1_optimal_allocation();
    // Group index 5 has no members.
    assert_eq!(group_cohesion(&alloc, &instance.socio, 5).unwrap(), 0.0);
}

#[test]
fn group_cohesion_dimension_mismatch() {
    let instance = dataset1();
    let alloc = Allocation::new(vec![0, 1]);
    assert!(matches!(
        group_cohesion(&alloc, &instance.socio, 0),
        Err(MtfpError::DimensionMismatch { .. })
    ));
}

#[test]
fn general_cohesion_dataset1_optimum() {
    let instance = dataset1();
    let alloc = dataset1_optimal_allocation();
    let e_g = general_cohesion(&alloc, &instance).unwrap();
    assert!((e_g - 1.6).abs() < 1e-9, "got {e_g}");
}

#[test]
fn general_cohesion_zero_matrix() {
    let socio = zero_socio(4);
    let req = RequirementMatrix::from_rows(vec![vec![2, 2]]).unwrap();
    let depts = DepartmentAssignment::sequential(&[4]);
    let instance = ProblemInstance::validated("zero", socio, req, depts).unwrap();
    let alloc = Allocation::new(vec![0, 0, 1, 1]);
    assert_eq!(general_cohesion(&alloc, &instance).unwrap(), 0.0);
}

#[test]
fn general_cohesion_single_group_all_positive() {
    // Everyone in one group over an all +1 off-diagonal matrix: the pair sum
    // is n(n-1), the group size n, the weight 1, so cohesion is n - 1.
    for n in [2usize, 3, 6] {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { 0 } else { 1 }).collect())
            .collect();
        let socio = SociometricMatrix::from_rows(rows).unwrap();
        let req = RequirementMatrix::from_rows(vec![vec![n as u32]]).unwrap();
        let depts = DepartmentAssignment::sequential(&[n as u32]);
        let instance = ProblemInstance::validated("ones", socio, req, depts).unwrap();
        let alloc = Allocation::new(vec![0; n]);
        let e_g = general_cohesion(&alloc, &instance).unwrap();
        assert!((e_g - (n as f64 - 1.0)).abs() < 1e-12, "n={n}, got {e_g}");
    }
}

#[test]
fn derived_requirements_matches_target_on_optimum() {
    let instance = dataset1();
    let derived = derived_requirements(&dataset1_optimal_allocation(), &instance).unwrap();
    assert_eq!(derived, instance.req);
}

#[test]
fn derived_requirements_everyone_in_group_one() {
    let instance = dataset1();
    let alloc = Allocation::new(vec![0; 10]);
    let derived = derived_requirements(&alloc, &instance).unwrap();
    let expected = RequirementMatrix::from_rows(vec![
        vec![4, 0, 0],
        vec![3, 0, 0],
        vec![2, 0, 0],
        vec![1, 0, 0],
    ])
    .unwrap();
    assert_eq!(derived, expected);
}

#[test]
fn derived_requirements_minimal_instance() {
    let socio = zero_socio(1);
    let req = RequirementMatrix::from_rows(vec![vec![1]]).unwrap();
    let depts = DepartmentAssignment::sequential(&[1]);
    let instance = ProblemInstance::validated("one", socio, req, depts).unwrap();
    let derived = derived_requirements(&Allocation::new(vec![0]), &instance).unwrap();
    assert_eq!(derived, RequirementMatrix::from_rows(vec![vec![1]]).unwrap());
}

#[test]
fn derived_requirements_rejects_out_of_range_group() {
    let instance = dataset1();
    let alloc = Allocation::new(vec![0, 0, 1, 1, 0, 1, 0, 2, 1, 3]);
    assert!(matches!(
        derived_requirements(&alloc, &instance),
        Err(MtfpError::GroupIndexOutOfRange { individual: 9, group: 3, .. })
    ));
}

#[test]
fn penalty_identity_is_zero() {
    let r = RequirementMatrix::from_rows(vec![vec![2, 0], vec![0, 2]]).unwrap();
    assert_eq!(penalty(&r, &r).unwrap(), 0);
    let one = RequirementMatrix::from_rows(vec![vec![1]]).unwrap();
    assert_eq!(penalty(&one, &one).unwrap(), 0);
}

#[test]
fn penalty_counts_absolute_differences() {
    let want = RequirementMatrix::from_rows(vec![vec![2, 0], vec![0, 2]]).unwrap();
    let got = RequirementMatrix::from_rows(vec![vec![1, 1], vec![1, 1]]).unwrap();
    assert_eq!(penalty(&got, &want).unwrap(), 4);
}

#[test]
fn penalty_dimension_mismatch() {
    let a = RequirementMatrix::from_rows(vec![vec![1, 0]]).unwrap();
    let b = RequirementMatrix::from_rows(vec![vec![1], vec![0]]).unwrap();
    assert!(matches!(
        penalty(&a, &b),
        Err(MtfpError::DimensionMismatch { .. })
    ));
}

#[test]
fn fitness_dataset1_optimum() {
    let instance = dataset1();
    let f = fitness(&dataset1_optimal_allocation(), &instance).unwrap();
    assert!((f - 1.6).abs() < 1e-9, "got {f}");
}

#[test]
fn fitness_everyone_in_group_one_penalized() {
    let instance = dataset1();
    let alloc = Allocation::new(vec![0; 10]);
    let cohesion = general_cohesion(&alloc, &instance).unwrap();
    let f = fitness(&alloc, &instance).unwrap();
    // Six people are missing from groups 2 and 3, and six extra sit in
    // group 1, so the penalty is 12.
    assert!((f - (cohesion - 12.0)).abs() < 1e-12, "got {f}");
}

#[test]
fn fitness_zero_matrix_feasible() {
    let socio = zero_socio(4);
    let req = RequirementMatrix::from_rows(vec![vec![2, 2]]).unwrap();
    let depts = DepartmentAssignment::sequential(&[4]);
    let instance = ProblemInstance::validated("zero", socio, req, depts).unwrap();
    let alloc = Allocation::new(vec![0, 0, 1, 1]);
    assert_eq!(fitness(&alloc, &instance).unwrap(), 0.0);
}

#[test]
fn is_feasible_dataset1() {
    let instance = dataset1();
    assert!(is_feasible(&dataset1_optimal_allocation(), &instance).unwrap());
    assert!(!is_feasible(&Allocation::new(vec![0; 10]), &instance).unwrap());
}

#[test]
fn is_feasible_forced_single_group() {
    let socio = zero_socio(3);
    let req = RequirementMatrix::from_rows(vec![vec![3]]).unwrap();
    let depts = DepartmentAssignment::sequential(&[3]);
    let instance = ProblemInstance::validated("forced", socio, req, depts).unwrap();
    assert!(is_feasible(&Allocation::new(vec![0, 0, 0]), &instance).unwrap());
}

#[test]
fn validate_dataset1_is_clean() {
    assert!(validate_instance(&dataset1()).is_empty());
}

#[test]
fn validate_reports_out_of_range_entry() {
    let mut rows = vec![vec![0i8; 3]; 3];
    rows[0][1] = 2;
    let socio = SociometricMatrix::from_rows(rows).unwrap();
    let req = RequirementMatrix::from_rows(vec![vec![3]]).unwrap();
    let instance =
        ProblemInstance::new("bad", socio, req, DepartmentAssignment::sequential(&[3]));
    let violations = validate_instance(&instance);
    assert_eq!(
        violations,
        vec![Violation::SocioEntryOutOfRange {
            row: 0,
            col: 1,
            value: 2
        }]
    );
}

#[test]
fn validate_reports_nonzero_diagonal() {
    let mut rows = vec![vec![0i8; 2]; 2];
    rows[1][1] = -1;
    let socio = SociometricMatrix::from_rows(rows).unwrap();
    let req = RequirementMatrix::from_rows(vec![vec![2]]).unwrap();
    let instance =
        ProblemInstance::new("bad", socio, req, DepartmentAssignment::sequential(&[2]));
    let violations = validate_instance(&instance);
    assert_eq!(
        violations,
        vec![Violation::SocioDiagonalNonZero { index: 1, value: -1 }]
    );
}

#[test]
fn validate_reports_department_size_mismatches() {
    // Row sums are (2, 2) but departments are assigned (3, 1): one violation
    // per department.
    let socio = zero_socio(4);
    let req = RequirementMatrix::from_rows(vec![vec![1, 1], vec![1, 1]]).unwrap();
    let depts = DepartmentAssignment::new(vec![0, 0, 0, 1]);
    let instance = ProblemInstance::new("bad", socio, req, depts);
    let violations = validate_instance(&instance);
    assert_eq!(violations.len(), 2);
    assert!(violations.contains(&Violation::DepartmentSizeMismatch {
        dept: 0,
        members: 3,
        row_sum: 2
    }));
    assert!(violations.contains(&Violation::DepartmentSizeMismatch {
        dept: 1,
        members: 1,
        row_sum: 2
    }));
}

#[test]
fn validate_reports_total_mismatch_and_bad_dept_index() {
    let socio = zero_socio(2);
    let req = RequirementMatrix::from_rows(vec![vec![1, 0]]).unwrap();
    let depts = DepartmentAssignment::new(vec![0, 3]);
    let instance = ProblemInstance::new("bad", socio, req, depts);
    let violations = validate_instance(&instance);
    assert!(violations.contains(&Violation::RequirementTotalMismatch {
        total: 1,
        n_individuals: 2
    }));
    assert!(violations.contains(&Violation::DepartmentIndexOutOfRange {
        individual: 1,
        dept: 3,
        n_departments: 1
    }));
}

#[test]
fn validated_constructor_rejects_bad_instances() {
    let socio = zero_socio(2);
    let req = RequirementMatrix::from_rows(vec![vec![1]]).unwrap();
    let depts = DepartmentAssignment::sequential(&[2]);
    assert!(matches!(
        ProblemInstance::validated("bad", socio, req, depts),
        Err(MtfpError::InvalidInstance(_))
    ));
}

#[test]
fn matrix_constructors_reject_bad_shapes() {
    assert!(matches!(
        SociometricMatrix::from_rows(vec![vec![0, 1], vec![0]]),
        Err(MtfpError::RaggedGrid { .. })
    ));
    assert!(matches!(
        SociometricMatrix::from_rows(vec![]),
        Err(MtfpError::EmptyGrid(_))
    ));
    assert!(matches!(
        RequirementMatrix::from_rows(vec![vec![1, 2], vec![3]]),
        Err(MtfpError::RaggedGrid { .. })
    ));
    assert!(matches!(
        RequirementMatrix::from_rows(vec![vec![]]),
        Err(MtfpError::EmptyGrid(_))
    ));
}
