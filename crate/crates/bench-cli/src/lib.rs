//! Benchmark harness behind the `mtfp` command-line tool: repeated seeded
//! solver trials with summary statistics, whole-directory benchmark tables,
//! and the exhaustive-solver timing sweep.

mod bench;
mod stats;
mod sweep;
mod trials;

pub use bench::{
    bench_instances, load_dataset_dir, read_bench_csv, render_bench_table, write_bench_csv,
    BenchRecord,
};
pub use stats::{sample_std, Summary};
pub use sweep::{read_sweep_csv, run_sweep, write_sweep_csv, SweepConfig, SweepRecord};
pub use trials::{run_trials, TrialRun, TrialStats, Trials};
