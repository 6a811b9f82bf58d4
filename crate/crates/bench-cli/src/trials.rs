use std::time::Duration;

use ga_engine::{derive_params, run, GaError, ParamOverrides};
use mtfp_core::ProblemInstance;

use crate::stats::Summary;

/// One seeded run inside a trial batch.
#[derive(Debug, Clone)]
pub struct TrialRun {
    pub seed: u64,
    pub fitness: f64,
    pub feasible: bool,
    pub elapsed: Duration,
}

/// Aggregate fitness statistics over a batch of seeded runs.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialStats {
    pub n_runs: usize,
    pub max: f64,
    pub mean: f64,
    /// Sample standard deviation (n - 1 divisor).
    pub std: f64,
    pub min: f64,
    /// Mean wall-clock seconds per run (solver time only, excluding load).
    pub mean_time_s: f64,
    /// Fitness evaluations per run.
    pub evaluations: u64,
}

/// Batch outcome: the aggregate plus every individual run.
#[derive(Debug, Clone)]
pub struct Trials {
    pub stats: TrialStats,
    pub runs: Vec<TrialRun>,
}

/// Runs the genetic algorithm `n_runs` times with derived parameters and the
/// seed schedule `base_seed + 1 ..= base_seed + n_runs`, and aggregates the
/// best-fitness statistics. Any seed in `overrides` is ignored; the schedule
/// owns seeding so batches are reproducible.
pub fn run_trials(
    instance: &ProblemInstance,
    n_runs: usize,
    base_seed: u64,
    scale: f64,
    overrides: &ParamOverrides,
) -> Result<Trials, GaError> {
    if n_runs < 2 {
        return Err(GaError::InvalidParams(format!(
            "trial batches need at least 2 runs for a sample deviation, got {n_runs}"
        )));
    }

    let mut runs = Vec::with_capacity(n_runs);
    let mut evaluations = 0u64;
    for i in 0..n_runs {
        let seed = base_seed + i as u64 + 1;
        let mut per_run = overrides.clone();
        per_run.seed = Some(seed);
        let params = derive_params(instance, scale, &per_run)?.params;
        let result = run(instance, &params)?;
        evaluations = result.evaluations;
        runs.push(TrialRun {
            seed,
            fitness: result.best_fitness,
            feasible: result.feasible,
            elapsed: result.elapsed,
        });
    }

    let fitnesses: Vec<f64> = runs.iter().map(|r| r.fitness).collect();
    let summary = Summary::of(&fitnesses);
    let mean_time_s =
        runs.iter().map(|r| r.elapsed.as_secs_f64()).sum::<f64>() / n_runs as f64;
    Ok(Trials {
        stats: TrialStats {
            n_runs,
            max: summary.max,
            mean: summary.mean,
            std: summary.std,
            min: summary.min,
            mean_time_s,
            evaluations,
        },
        runs,
    })
}
