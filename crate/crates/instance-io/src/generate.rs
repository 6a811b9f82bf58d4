use mtfp_core::{
    DepartmentAssignment, ProblemInstance, RequirementMatrix, SociometricMatrix,
};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::InstanceIoError;

/// Default probability of a +1 (choice) off-diagonal sociometric entry.
pub const DEFAULT_POSITIVE_RATE: f64 = 0.4;
/// Default probability of a -1 (rejection) off-diagonal sociometric entry.
pub const DEFAULT_NEGATIVE_RATE: f64 = 0.1;

/// Configuration for random instance generation.
///
/// Off-diagonal sociometric entries are drawn i.i.d. with
/// `P(+1) = positive_rate`, `P(-1) = negative_rate`, and `0` otherwise.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorConfig {
    pub n_individuals: usize,
    pub n_departments: usize,
    pub n_groups: usize,
    pub positive_rate: f64,
    pub negative_rate: f64,
    pub seed: u64,
}

impl GeneratorConfig {
    /// Config with the default entry distribution.
    pub fn new(n_individuals: usize, n_departments: usize, n_groups: usize, seed: u64) -> Self {
        Self {
            n_individuals,
            n_departments,
            n_groups,
            positive_rate: DEFAULT_POSITIVE_RATE,
            negative_rate: DEFAULT_NEGATIVE_RATE,
            seed,
        }
    }

    fn validate(&self) -> Result<(), InstanceIoError> {
        let bad = |msg: String| Err(InstanceIoError::InvalidConfig(msg));
        if self.n_individuals == 0 || self.n_departments == 0 || self.n_groups == 0 {
            return bad("individuals, departments and groups must all be at least 1".into());
        }
        if self.n_individuals < self.n_departments {
            return bad(format!(
                "{} individuals cannot populate {} departments",
                self.n_individuals, self.n_departments
            ));
        }
        if self.n_individuals < self.n_groups {
            return bad(format!(
                "{} individuals cannot populate {} groups",
                self.n_individuals, self.n_groups
            ));
        }
        for (label, rate) in [
            ("positive_rate", self.positive_rate),
            ("negative_rate", self.negative_rate),
        ] {
            if !(0.0..=1.0).contains(&rate) || !rate.is_finite() {
                return bad(format!("{label} {rate} must be within [0, 1]"));
            }
        }
        if self.positive_rate + self.negative_rate > 1.0 {
            return bad(format!(
                "positive_rate + negative_rate = {} exceeds 1",
                self.positive_rate + self.negative_rate
            ));
        }
        Ok(())
    }

    /// The provenance-carrying name given to generated instances.
    fn instance_name(&self) -> String {
        format!(
            "gen-ni{}-nj{}-nk{}-pos{:.2}-neg{:.2}-seed{}",
            self.n_individuals,
            self.n_departments,
            self.n_groups,
            self.positive_rate,
            self.negative_rate,
            self.seed
        )
    }
}

/// Generates a random instance: a requirement matrix that partitions all
/// individuals over the departments x groups cells with every department
/// non-empty, sequential department assignment by row sums, and an i.i.d.
/// random non-symmetric sociometric matrix.
///
/// Deterministic for a given config: the RNG is seeded from `config.seed`
/// and consumed in a fixed order (requirement cells, then sociometric
/// entries row-major).
pub fn generate_instance(config: &GeneratorConfig) -> Result<ProblemInstance, InstanceIoError> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let (n_i, n_j, n_k) = (config.n_individuals, config.n_departments, config.n_groups);

    // One person per department keeps every row sum >= 1; the rest scatter
    // uniformly over all cells.
    let mut req_rows = vec![vec![0u32; n_k]; n_j];
    for row in req_rows.iter_mut() {
        row[rng.random_range(0..n_k)] += 1;
    }
    for _ in n_j..n_i {
        let dept = rng.random_range(0..n_j);
        let group = rng.random_range(0..n_k);
        req_rows[dept][group] += 1;
    }

    let sizes: Vec<u32> = req_rows.iter().map(|row| row.iter().sum()).collect();
    let depts = DepartmentAssignment::sequential(&sizes);

    let mut socio_rows = vec![vec![0i8; n_i]; n_i];
    for (i, row) in socio_rows.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            if i == j {
                continue;
            }
            let draw: f64 = rng.random();
            *cell = if draw < config.positive_rate {
                1
            } else if draw < config.positive_rate + config.negative_rate {
                -1
            } else {
                0
            };
        }
    }

    let instance = ProblemInstance::validated(
        config.instance_name(),
        SociometricMatrix::from_rows(socio_rows).map_err(to_config_err)?,
        RequirementMatrix::from_rows(req_rows).map_err(to_config_err)?,
        depts,
    )
    .map_err(to_config_err)?;
    Ok(instance)
}

fn to_config_err(e: mtfp_core::MtfpError) -> InstanceIoError {
    InstanceIoError::InvalidConfig(e.to_string())
}
