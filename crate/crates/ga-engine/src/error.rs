use thiserror::Error;

#[derive(Debug, Error)]
pub enum GaError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("population is empty")]
    EmptyPopulation,

    #[error("population and fitness lists differ in length ({population} vs {fitness})")]
    FitnessLengthMismatch { population: usize, fitness: usize },

    #[error("population size {0} is odd; crossover pairs consecutive chromosomes")]
    OddPopulation(usize),

    #[error("gene {gene} is not one-hot: {reason}")]
    MalformedGene { gene: usize, reason: String },

    #[error(transparent)]
    Core(#[from] mtfp_core::MtfpError),
}
