//! Genetic algorithm for the multiple team formation problem.
//!
//! Candidate solutions are chromosomes of one-hot genes — one gene per
//! individual, one bit per group — so "everyone belongs to exactly one
//! group" holds structurally and only the requirement matrix needs the
//! penalty term of the fitness function. The engine runs the classic loop:
//!
//! 1. evaluate the penalized fitness of every chromosome,
//! 2. binary tournament selection,
//! 3. pairwise gene-swap crossover (each gene exchanged with probability
//!    `beta`),
//! 4. per-gene mutation (each gene re-randomized with probability `alpha`),
//!
//! for a fixed number of generations, tracking the best individual ever
//! evaluated. Every run is driven by a single seeded RNG, so equal
//! `(instance, params)` inputs reproduce the same result.

mod chromosome;
mod error;
mod operators;
mod params;
mod solver;

pub use chromosome::Chromosome;
pub use error::GaError;
pub use operators::{crossover, init_population, mutate, tournament_select};
pub use params::{
    derive_params, GaParams, ParamDerivation, ParamOverrides, DEFAULT_CROSSOVER_RATE,
    DEFAULT_GENERATION_SCALE, DEFAULT_POPULATION_SIZE, DEFAULT_TOURNAMENT_SIZE,
};
pub use solver::{run, SolveResult};
