use mtfp_core::ProblemInstance;

use crate::GaError;

/// Default population size; larger populations showed no meaningful gains on
/// the benchmark family.
pub const DEFAULT_POPULATION_SIZE: usize = 50;
/// Default per-gene crossover swap probability.
pub const DEFAULT_CROSSOVER_RATE: f64 = 0.2;
/// Default scale factor for the generation-count formula.
pub const DEFAULT_GENERATION_SCALE: f64 = 20.0;
/// Default tournament size (binary tournaments).
pub const DEFAULT_TOURNAMENT_SIZE: usize = 2;

/// Run parameters for the genetic algorithm.
#[derive(Debug, Clone, PartialEq)]
pub struct GaParams {
    pub n_generations: usize,
    pub population_size: usize,
    /// Per-gene probability that crossover exchanges the gene between a pair
    /// of parents.
    pub crossover_rate: f64,
    /// Per-gene probability that mutation re-randomizes the gene.
    pub mutation_rate: f64,
    pub tournament_size: usize,
    pub seed: u64,
}

impl GaParams {
    pub fn validate(&self) -> Result<(), GaError> {
        let bad = |msg: String| Err(GaError::InvalidParams(msg));
        if self.n_generations == 0 {
            return bad("n_generations must be at least 1".into());
        }
        if self.population_size < 2 || !self.population_size.is_multiple_of(2) {
            return bad(format!(
                "population_size {} must be even and at least 2",
                self.population_size
            ));
        }
        for (label, rate) in [
            ("crossover_rate", self.crossover_rate),
            ("mutation_rate", self.mutation_rate),
        ] {
            if !(0.0..=1.0).contains(&rate) || !rate.is_finite() {
                return bad(format!("{label} {rate} must be within [0, 1]"));
            }
        }
        if self.tournament_size == 0 {
            return bad("tournament_size must be at least 1".into());
        }
        Ok(())
    }
}

/// Selected fields of [`GaParams`] to override after derivation.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ParamOverrides {
    pub n_generations: Option<usize>,
    pub population_size: Option<usize>,
    pub crossover_rate: Option<f64>,
    pub mutation_rate: Option<f64>,
    pub tournament_size: Option<usize>,
    pub seed: Option<u64>,
}

/// Result of [`derive_params`]: the parameters plus a flag for the
/// degenerate single-group case.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamDerivation {
    pub params: GaParams,
    /// True when the generation formula produced 0 (one group makes the
    /// log factor vanish) and the count was clamped to 1.
    pub n_generations_clamped: bool,
}

/// Derives run parameters from the instance shape:
///
/// - `n_generations = round(scale * n_i * ln(n_g))`, clamped to at least 1 —
///   a logarithmic damping of the `n_g^(n_i)` solution-space growth so the
///   evaluation budget scales with problem size;
/// - population 50, crossover rate 0.2, tournament size 2;
/// - mutation rate `1 / n_i`, so on average one gene per chromosome mutates.
///
/// `overrides` replace individual fields after derivation.
pub fn derive_params(
    instance: &ProblemInstance,
    scale: f64,
    overrides: &ParamOverrides,
) -> Result<ParamDerivation, GaError> {
    if scale <= 0.0 || !scale.is_finite() {
        return Err(GaError::InvalidParams(format!(
            "generation scale factor {scale} must be positive and finite"
        )));
    }
    let n_i = instance.n_individuals();
    let n_g = instance.n_groups();

    let raw = (scale * n_i as f64 * (n_g as f64).ln()).round();
    let clamped = raw < 1.0;
    let derived_n_gen = if clamped { 1 } else { raw as usize };

    let params = GaParams {
        n_generations: overrides.n_generations.unwrap_or(derived_n_gen),
        population_size: overrides.population_size.unwrap_or(DEFAULT_POPULATION_SIZE),
        crossover_rate: overrides.crossover_rate.unwrap_or(DEFAULT_CROSSOVER_RATE),
        mutation_rate: overrides.mutation_rate.unwrap_or(1.0 / n_i as f64),
        tournament_size: overrides.tournament_size.unwrap_or(DEFAULT_TOURNAMENT_SIZE),
        seed: overrides.seed.unwrap_or(0),
    };
    params.validate()?;
    Ok(ParamDerivation {
        params,
        n_generations_clamped: clamped && overrides.n_generations.is_none(),
    })
}
