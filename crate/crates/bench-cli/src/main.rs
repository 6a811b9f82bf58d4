//! `mtfp` — command-line front end for the team formation toolkit.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use thiserror::Error;

use bench_cli::{
    bench_instances, load_dataset_dir, render_bench_table, run_sweep, write_bench_csv,
    write_sweep_csv, SweepConfig,
};
use exhaustive::ExhaustiveError;
use ga_engine::{derive_params, GaError, ParamOverrides};
use instance_io::{GeneratorConfig, InstanceIoError};
use mtfp_core::{Allocation, ProblemInstance};

#[derive(Parser)]
#[command(
    name = "mtfp",
    version,
    about = "Team formation solver: maximizes sociometric cohesion under per-department group quotas"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance with the genetic algorithm
    Solve {
        /// Path to an .mtfp instance document
        instance: PathBuf,
        /// RNG seed
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Scale factor of the generation-count formula round(scale * n_i * ln(n_g))
        #[arg(long, default_value_t = ga_engine::DEFAULT_GENERATION_SCALE)]
        scale: f64,
        /// Override the derived generation count
        #[arg(long)]
        generations: Option<usize>,
        /// Override the population size (must be even)
        #[arg(long)]
        population: Option<usize>,
        /// Override the per-gene crossover swap probability
        #[arg(long)]
        crossover_rate: Option<f64>,
        /// Override the per-gene mutation probability (default 1/n_i)
        #[arg(long)]
        mutation_rate: Option<f64>,
        /// Override the tournament size
        #[arg(long)]
        tournament_size: Option<usize>,
    },
    /// Solve an instance exactly by enumerating all feasible allocations
    Exact {
        /// Path to an .mtfp instance document
        instance: PathBuf,
        /// Maximum feasible allocations to score (default 100000000)
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Benchmark every .mtfp instance in a directory: exhaustive solve plus
    /// seeded genetic-algorithm trials
    Bench {
        /// Directory of .mtfp instance documents
        dir: PathBuf,
        /// Genetic-algorithm runs per instance
        #[arg(long, default_value_t = 20)]
        runs: usize,
        /// Base seed; run i uses base_seed + i + 1
        #[arg(long, default_value_t = 0)]
        base_seed: u64,
        /// Generation-count scale factor
        #[arg(long, default_value_t = ga_engine::DEFAULT_GENERATION_SCALE)]
        scale: f64,
        /// Exhaustive evaluation budget per instance
        #[arg(long)]
        budget: Option<u64>,
        /// Also write the table as CSV to this path
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Time the exhaustive solver over a grid of random instance shapes
    Sweep {
        #[arg(long, default_value_t = 5)]
        ni_min: usize,
        #[arg(long, default_value_t = 12)]
        ni_max: usize,
        #[arg(long, default_value_t = 2)]
        k_min: usize,
        #[arg(long, default_value_t = 5)]
        k_max: usize,
        /// Fixed department count for every generated instance
        #[arg(long, default_value_t = 3)]
        departments: usize,
        /// Instances per (n_i, k) cell; the slowest and fastest are discarded
        #[arg(long, default_value_t = 20)]
        runs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Exhaustive evaluation budget per instance
        #[arg(long)]
        budget: Option<u64>,
        /// Write records as CSV to this path instead of stdout
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Generate a random instance document
    Gen {
        #[arg(long)]
        individuals: usize,
        #[arg(long)]
        departments: usize,
        #[arg(long)]
        groups: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Probability of a +1 off-diagonal sociometric entry
        #[arg(long, default_value_t = instance_io::DEFAULT_POSITIVE_RATE)]
        positive_rate: f64,
        /// Probability of a -1 off-diagonal sociometric entry
        #[arg(long, default_value_t = instance_io::DEFAULT_NEGATIVE_RATE)]
        negative_rate: f64,
        /// Replace the generated provenance name
        #[arg(long)]
        name: Option<String>,
        /// Output path (stdout when omitted)
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check an instance document and report every violation
    Validate {
        /// Path to an .mtfp instance document
        instance: PathBuf,
    },
}

/// Exit codes: 1 usage/I-O/parse, 2 validation, 3 budget refusal,
/// 4 infeasible result.
#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Budget(String),
    #[error("best allocation does not satisfy the requirement matrix")]
    Infeasible,
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Validation(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Infeasible => 4,
        }
    }
}

impl From<InstanceIoError> for CliError {
    fn from(e: InstanceIoError) -> Self {
        match e {
            InstanceIoError::Validation(_) => CliError::Validation(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<ExhaustiveError> for CliError {
    fn from(e: ExhaustiveError) -> Self {
        match e {
            ExhaustiveError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            ExhaustiveError::InvalidInstance(_) => CliError::Validation(e.to_string()),
            ExhaustiveError::NoFeasibleAllocation => CliError::Validation(e.to_string()),
        }
    }
}

impl From<GaError> for CliError {
    fn from(e: GaError) -> Self {
        match e {
            GaError::Core(_) => CliError::Validation(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    // Die quietly when a downstream pipe closes instead of panicking on
    // the next print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }

    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version land here too; they keep exit code 0.
            let code = u8::from(e.use_stderr());
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn dispatch(command: Command) -> Result<(), CliError> {
    match command {
        Command::Solve {
            instance,
            seed,
            scale,
            generations,
            population,
            crossover_rate,
            mutation_rate,
            tournament_size,
        } => {
            let overrides = ParamOverrides {
                n_generations: generations,
                population_size: population,
                crossover_rate,
                mutation_rate,
                tournament_size,
                seed: Some(seed),
            };
            cmd_solve(&instance, scale, &overrides)
        }
        Command::Exact { instance, budget } => cmd_exact(&instance, budget),
        Command::Bench {
            dir,
            runs,
            base_seed,
            scale,
            budget,
            csv,
        } => cmd_bench(&dir, runs, base_seed, scale, budget, csv.as_deref()),
        Command::Sweep {
            ni_min,
            ni_max,
            k_min,
            k_max,
            departments,
            runs,
            seed,
            budget,
            csv,
        } => {
            let config = SweepConfig {
                individuals: ni_min..=ni_max,
                groups: k_min..=k_max,
                n_departments: departments,
                runs_per_cell: runs,
                base_seed: seed,
                budget,
            };
            cmd_sweep(&config, csv.as_deref())
        }
        Command::Gen {
            individuals,
            departments,
            groups,
            seed,
            positive_rate,
            negative_rate,
            name,
            output,
        } => {
            let config = GeneratorConfig {
                n_individuals: individuals,
                n_departments: departments,
                n_groups: groups,
                positive_rate,
                negative_rate,
                seed,
            };
            cmd_gen(&config, name, output.as_deref())
        }
        Command::Validate { instance } => cmd_validate(&instance),
    }
}

fn cmd_solve(path: &Path, scale: f64, overrides: &ParamOverrides) -> Result<(), CliError> {
    let instance = instance_io::load_instance_from_path(path)?;
    let derivation = derive_params(&instance, scale, overrides)?;
    if derivation.n_generations_clamped {
        eprintln!("warning: single group makes the generation formula vanish; running 1 generation");
    }
    let params = derivation.params;
    let result = ga_engine::run(&instance, &params)?;

    println!("instance: {}", describe(&instance));
    println!(
        "parameters: generations={} population={} crossover-rate={} mutation-rate={:.6} tournament={} seed={}",
        params.n_generations,
        params.population_size,
        params.crossover_rate,
        params.mutation_rate,
        params.tournament_size,
        params.seed
    );
    println!("best fitness: {:.4}", result.best_fitness);
    println!("feasible: {}", if result.feasible { "yes" } else { "no" });
    println!("evaluations: {}", result.evaluations);
    println!("time: {:.3} s", result.elapsed.as_secs_f64());
    print!("{}", render_allocation(&result.best_allocation, instance.n_groups()));

    if result.feasible {
        Ok(())
    } else {
        Err(CliError::Infeasible)
    }
}

fn cmd_exact(path: &Path, budget: Option<u64>) -> Result<(), CliError> {
    let instance = instance_io::load_instance_from_path(path)?;
    let result = exhaustive::solve_exact(&instance, budget)?;
    println!("instance: {}", describe(&instance));
    println!("best cohesion: {:.4}", result.best_cohesion);
    println!("feasible allocations: {}", result.feasible_count);
    println!("evaluations: {}", result.evaluations);
    println!("time: {:.6} s", result.elapsed.as_secs_f64());
    print!("{}", render_allocation(&result.best_allocation, instance.n_groups()));
    Ok(())
}

fn cmd_bench(
    dir: &Path,
    runs: usize,
    base_seed: u64,
    scale: f64,
    budget: Option<u64>,
    csv: Option<&Path>,
) -> Result<(), CliError> {
    let instances = load_dataset_dir(dir)?;
    let records = bench_instances(
        &instances,
        runs,
        base_seed,
        scale,
        budget,
        &ParamOverrides::default(),
    );
    print!("{}", render_bench_table(&records));
    if let Some(path) = csv {
        write_bench_csv(&records, std::fs::File::create(path)?)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        eprintln!("wrote {}", path.display());
    }
    Ok(())
}

fn cmd_sweep(config: &SweepConfig, csv: Option<&Path>) -> Result<(), CliError> {
    let records = run_sweep(config).map_err(CliError::Usage)?;
    match csv {
        Some(path) => {
            write_sweep_csv(&records, std::fs::File::create(path)?)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            eprintln!("wrote {}", path.display());
        }
        None => {
            write_sweep_csv(&records, std::io::stdout().lock())
                .map_err(|e| CliError::Usage(e.to_string()))?;
        }
    }
    Ok(())
}

fn cmd_gen(
    config: &GeneratorConfig,
    name: Option<String>,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let mut instance = instance_io::generate_instance(config)?;
    if let Some(name) = name {
        instance.name = name;
    }
    match output {
        Some(path) => {
            instance_io::save_instance(&instance, std::fs::File::create(path)?)?;
            eprintln!("wrote {}", path.display());
        }
        None => {
            instance_io::save_instance(&instance, std::io::stdout().lock())?;
        }
    }
    Ok(())
}

fn cmd_validate(path: &Path) -> Result<(), CliError> {
    let instance = instance_io::load_instance_from_path(path)?;
    println!("OK: {}", describe(&instance));
    Ok(())
}

fn describe(instance: &ProblemInstance) -> String {
    format!(
        "{} ({} individuals, {} departments, {} groups)",
        instance.name,
        instance.n_individuals(),
        instance.n_departments(),
        instance.n_groups()
    )
}

/// 0/1 allocation-matrix table plus per-group member lists, 1-based labels.
fn render_allocation(alloc: &Allocation, n_groups: usize) -> String {
    let n = alloc.n_individuals();
    let row_width = format!("I{n}").len();
    let col_width = format!("G{n_groups}").len();
    let mut out = String::from("allocation:\n");
    let _ = write!(out, "{:>row_width$}", "");
    for k in 0..n_groups {
        let _ = write!(out, " {:>col_width$}", format!("G{}", k + 1));
    }
    out.push('\n');
    for i in 0..n {
        let _ = write!(out, "{:>row_width$}", format!("I{}", i + 1));
        for k in 0..n_groups {
            let bit = if alloc.group_of(i) == k { 1 } else { 0 };
            let _ = write!(out, " {bit:>col_width$}");
        }
        out.push('\n');
    }
    out.push_str("group members:\n");
    for k in 0..n_groups {
        let members: Vec<String> = alloc
            .members_of(k)
            .into_iter()
            .map(|i| format!("I{}", i + 1))
            .collect();
        let _ = writeln!(out, "  G{}: {}", k + 1, members.join(" "));
    }
    out
}
