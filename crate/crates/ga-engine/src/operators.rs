use rand::Rng;

use crate::{Chromosome, GaError};

/// Creates `population_size` chromosomes of `n_individuals` genes each, every
/// gene's set bit drawn uniformly over the `n_groups` positions.
pub fn init_population(
    population_size: usize,
    n_individuals: usize,
    n_groups: usize,
    rng: &mut impl Rng,
) -> Vec<Chromosome> {
    (0..population_size)
        .map(|_| {
            let genes = (0..n_individuals)
                .map(|_| rng.random_range(0..n_groups))
                .collect();
            Chromosome::new(genes, n_groups).expect("sampled genes are in range")
        })
        .collect()
}

/// Binary (or `tournament_size`-ary) tournament selection: produces one
/// winner per population slot by drawing contestants uniformly at random
/// with replacement and copying the one with the highest fitness. Fitness
/// ties are broken uniformly at random among the tied contestants.
pub fn tournament_select(
    population: &[Chromosome],
    fitness: &[f64],
    tournament_size: usize,
    rng: &mut impl Rng,
) -> Result<Vec<Chromosome>, GaError> {
    if population.is_empty() {
        return Err(GaError::EmptyPopulation);
    }
    if population.len() != fitness.len() {
        return Err(GaError::FitnessLengthMismatch {
            population: population.len(),
            fitness: fitness.len(),
        });
    }
    let mut winners = Vec::with_capacity(population.len());
    let mut tied: Vec<usize> = Vec::with_capacity(tournament_size);
    for _ in 0..population.len() {
        let mut best = f64::NEG_INFINITY;
        tied.clear();
        for _ in 0..tournament_size {
            let contestant = rng.random_range(0..population.len());
            if fitness[contestant] > best {
                best = fitness[contestant];
                tied.clear();
                tied.push(contestant);
            } else if fitness[contestant] == best {
                tied.push(contestant);
            }
        }
        let winner = if tied.len() == 1 {
            tied[0]
        } else {
            tied[rng.random_range(0..tied.len())]
        };
        winners.push(population[winner].clone());
    }
    Ok(winners)
}

/// Pairwise gene-swap crossover, in place: consecutive pairs (0,1), (2,3), …
/// exchange each gene independently with probability `swap_rate`, so the two
/// offspring of a pair always carry the parents' gene multiset at every
/// position. A rate of `b` and `1 - b` produce mirrored offspring pairs.
pub fn crossover(
    population: &mut [Chromosome],
    swap_rate: f64,
    rng: &mut impl Rng,
) -> Result<(), GaError> {
    if !population.len().is_multiple_of(2) {
        return Err(GaError::OddPopulation(population.len()));
    }
    for pair in population.chunks_exact_mut(2) {
        let (first, second) = pair.split_at_mut(1);
        let (first, second) = (&mut first[0], &mut second[0]);
        for gene in 0..first.n_genes() {
            if rng.random::<f64>() < swap_rate {
                first.swap_gene_with(second, gene);
            }
        }
    }
    Ok(())
}

/// Per-gene mutation, in place: each gene is re-randomized with probability
/// `mutation_rate`; the new set bit is drawn uniformly over all positions,
/// including the current one. Returns the number of genes re-randomized
/// (drawn positions that happen to repeat the old one still count).
pub fn mutate(population: &mut [Chromosome], mutation_rate: f64, rng: &mut impl Rng) -> u64 {
    let mut events = 0u64;
    for chromosome in population.iter_mut() {
        let n_groups = chromosome.n_groups();
        for gene in 0..chromosome.n_genes() {
            if rng.random::<f64>() < mutation_rate {
                chromosome.set_gene(gene, rng.random_range(0..n_groups));
                events += 1;
            }
        }
    }
    events
}
