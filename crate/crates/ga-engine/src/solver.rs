use std::time::Instant;

use mtfp_core::{fitness, is_feasible, validate_instance, Allocation, ProblemInstance};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::{crossover, init_population, mutate, tournament_select, GaError, GaParams};

/// Outcome of one genetic-algorithm run.
#[derive(Debug, Clone)]
pub struct SolveResult {
    /// Decoded best individual ever evaluated.
    pub best_allocation: Allocation,
    /// Its penalized fitness.
    pub best_fitness: f64,
    /// Whether the best individual meets the requirement matrix exactly.
    pub feasible: bool,
    /// Best fitness seen up to and including each generation;
    /// non-decreasing by construction.
    pub history: Vec<f64>,
    /// Total fitness evaluations: population size x generations.
    pub evaluations: u64,
    /// Wall-clock time of the run. Excluded from the determinism contract;
    /// every other field is reproduced exactly by an equal seed.
    pub elapsed: std::time::Duration,
}

/// Runs the genetic algorithm: evaluate, select, cross over, mutate, for
/// `params.n_generations` generations, driven by a single RNG seeded from
/// `params.seed`.
///
/// There is no elitism — selection pressure alone carries good genes — but
/// the best individual ever evaluated is tracked outside the population and
/// returned, so nothing observed is lost. The final mutated population is
/// never evaluated; evaluations stay exactly `population_size x
/// n_generations`.
pub fn run(instance: &ProblemInstance, params: &GaParams) -> Result<SolveResult, GaError> {
    params.validate()?;
    let violations = validate_instance(instance);
    if !violations.is_empty() {
        return Err(GaError::Core(mtfp_core::MtfpError::InvalidInstance(
            violations,
        )));
    }

    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let n_i = instance.n_individuals();
    let n_g = instance.n_groups();

    let mut population = init_population(params.population_size, n_i, n_g, &mut rng);
    let mut best: Option<(Allocation, f64)> = None;
    let mut history = Vec::with_capacity(params.n_generations);
    let mut evaluations = 0u64;
    let mut scores = vec![0.0f64; params.population_size];

    for _ in 0..params.n_generations {
        for (chromosome, score) in population.iter().zip(scores.iter_mut()) {
            let alloc = chromosome.decode();
            *score = fitness(&alloc, instance)?;
            evaluations += 1;
            match &best {
                Some((_, best_score)) if *score <= *best_score => {}
                _ => best = Some((alloc, *score)),
            }
        }
        let (_, best_score) = best.as_ref().expect("population is non-empty");
        history.push(*best_score);

        population = tournament_select(&population, &scores, params.tournament_size, &mut rng)?;
        crossover(&mut population, params.crossover_rate, &mut rng)?;
        mutate(&mut population, params.mutation_rate, &mut rng);
    }

    let (best_allocation, best_fitness) = best.expect("at least one generation ran");
    let feasible = is_feasible(&best_allocation, instance)?;
    Ok(SolveResult {
        best_allocation,
        best_fitness,
        feasible,
        history,
        evaluations,
        elapsed: start.elapsed(),
    })
}
