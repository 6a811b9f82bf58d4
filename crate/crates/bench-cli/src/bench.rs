use std::fmt::Write as _;
use std::path::Path;

use exhaustive::{solve_exact, ExhaustiveError};
use ga_engine::ParamOverrides;
use mtfp_core::ProblemInstance;

use crate::trials::run_trials;

/// One benchmark-table row: exhaustive columns when the instance fits the
/// evaluation budget, genetic-algorithm trial statistics, and a note for
/// anything that went wrong or was skipped.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub dataset: String,
    pub exhaustive_best: Option<f64>,
    pub exhaustive_time_s: Option<f64>,
    pub exhaustive_evals: Option<u64>,
    pub ga_max: Option<f64>,
    pub ga_mean: Option<f64>,
    pub ga_std: Option<f64>,
    pub ga_min: Option<f64>,
    pub ga_time_s: Option<f64>,
    pub ga_evals: Option<u64>,
    pub note: String,
}

impl BenchRecord {
    fn empty(dataset: String) -> Self {
        Self {
            dataset,
            exhaustive_best: None,
            exhaustive_time_s: None,
            exhaustive_evals: None,
            ga_max: None,
            ga_mean: None,
            ga_std: None,
            ga_min: None,
            ga_time_s: None,
            ga_evals: None,
            note: String::new(),
        }
    }
}

/// Loads every `.mtfp` document in a directory, sorted by file name so the
/// benchmark order is stable. Files that fail to load become `Err` entries
/// keyed by file name.
pub fn load_dataset_dir(
    dir: impl AsRef<Path>,
) -> std::io::Result<Vec<(String, Result<ProblemInstance, instance_io::InstanceIoError>)>> {
    let mut paths: Vec<_> = std::fs::read_dir(dir)?
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .map(|entry| entry.path())
        .filter(|path| {
            path.extension()
                .map(|ext| ext == instance_io::FILE_EXTENSION)
                .unwrap_or(false)
        })
        .collect();
    paths.sort();
    Ok(paths
        .into_iter()
        .map(|path| {
            let stem = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default();
            (stem, instance_io::load_instance_from_path(&path))
        })
        .collect())
}

/// Benchmarks a list of named instances: exhaustive solve (when within
/// `budget`) plus `n_runs` seeded genetic-algorithm trials each. Failures
/// are recorded in the row's note and the batch continues.
pub fn bench_instances(
    instances: &[(String, Result<ProblemInstance, instance_io::InstanceIoError>)],
    n_runs: usize,
    base_seed: u64,
    scale: f64,
    budget: Option<u64>,
    overrides: &ParamOverrides,
) -> Vec<BenchRecord> {
    instances
        .iter()
        .map(|(name, loaded)| {
            let mut record = BenchRecord::empty(name.clone());
            let instance = match loaded {
                Ok(instance) => instance,
                Err(e) => {
                    record.note = format!("load failed: {e}");
                    return record;
                }
            };
            record.dataset = instance.name.clone();

            match solve_exact(instance, budget) {
                Ok(exact) => {
                    record.exhaustive_best = Some(exact.best_cohesion);
                    record.exhaustive_time_s = Some(exact.elapsed.as_secs_f64());
                    record.exhaustive_evals = Some(exact.evaluations);
                }
                Err(ExhaustiveError::BudgetExceeded { feasible_count, .. }) => {
                    record.note = format!("exhaustive skipped: {feasible_count} feasible allocations over budget");
                }
                Err(e) => {
                    record.note = format!("exhaustive failed: {e}");
                }
            }

            match run_trials(instance, n_runs, base_seed, scale, overrides) {
                Ok(trials) => {
                    record.ga_max = Some(trials.stats.max);
                    record.ga_mean = Some(trials.stats.mean);
                    record.ga_std = Some(trials.stats.std);
                    record.ga_min = Some(trials.stats.min);
                    record.ga_time_s = Some(trials.stats.mean_time_s);
                    record.ga_evals = Some(trials.stats.evaluations);
                    if !trials.runs.iter().all(|r| r.feasible) {
                        let infeasible = trials.runs.iter().filter(|r| !r.feasible).count();
                        append_note(&mut record.note, format!("{infeasible} runs infeasible"));
                    }
                }
                Err(e) => append_note(&mut record.note, format!("trials failed: {e}")),
            }
            record
        })
        .collect()
}

fn append_note(note: &mut String, addition: String) {
    if !note.is_empty() {
        note.push_str("; ");
    }
    note.push_str(&addition);
}

const BENCH_HEADER: [&str; 11] = [
    "dataset",
    "exhaustive_best",
    "exhaustive_time_s",
    "exhaustive_evals",
    "ga_max",
    "ga_mean",
    "ga_std",
    "ga_min",
    "ga_time_s",
    "ga_evals",
    "note",
];

fn opt_cell<T: ToString>(value: &Option<T>) -> String {
    value.as_ref().map_or_else(|| "N/A".into(), T::to_string)
}

fn parse_opt<T: std::str::FromStr>(cell: &str) -> Result<Option<T>, String>
where
    T::Err: std::fmt::Display,
{
    if cell == "N/A" {
        return Ok(None);
    }
    cell.parse::<T>().map(Some).map_err(|e| format!("{cell:?}: {e}"))
}

/// Writes benchmark records as CSV. Absent cells are written as `N/A`;
/// floats keep full shortest-round-trip precision so the file re-parses to
/// the same values.
pub fn write_bench_csv(records: &[BenchRecord], sink: impl std::io::Write) -> csv::Result<()> {
    let mut writer = csv::Writer::from_writer(sink);
    writer.write_record(BENCH_HEADER)?;
    for r in records {
        writer.write_record([
            r.dataset.clone(),
            opt_cell(&r.exhaustive_best),
            opt_cell(&r.exhaustive_time_s),
            opt_cell(&r.exhaustive_evals),
            opt_cell(&r.ga_max),
            opt_cell(&r.ga_mean),
            opt_cell(&r.ga_std),
            opt_cell(&r.ga_min),
            opt_cell(&r.ga_time_s),
            opt_cell(&r.ga_evals),
            r.note.clone(),
        ])?;
    }
    writer.flush()?;
    Ok(())
}

/// Reads back a benchmark CSV produced by [`write_bench_csv`].
pub fn read_bench_csv(source: impl std::io::Read) -> Result<Vec<BenchRecord>, String> {
    let mut reader = csv::Reader::from_reader(source);
    let mut records = Vec::new();
    for row in reader.records() {
        let row = row.map_err(|e| e.to_string())?;
        if row.len() != BENCH_HEADER.len() {
            return Err(format!("expected {} columns, got {}", BENCH_HEADER.len(), row.len()));
        }
        records.push(BenchRecord {
            dataset: row[0].to_string(),
            exhaustive_best: parse_opt(&row[1])?,
            exhaustive_time_s: parse_opt(&row[2])?,
            exhaustive_evals: parse_opt(&row[3])?,
            ga_max: parse_opt(&row[4])?,
            ga_mean: parse_opt(&row[5])?,
            ga_std: parse_opt(&row[6])?,
            ga_min: parse_opt(&row[7])?,
            ga_time_s: parse_opt(&row[8])?,
            ga_evals: parse_opt(&row[9])?,
            note: row[10].to_string(),
        });
    }
    Ok(records)
}

fn fmt4(value: &Option<f64>) -> String {
    value.map_or_else(|| "N/A".into(), |v| format!("{v:.4}"))
}

/// Renders the records as a fixed-width text table, fitness to four decimal
/// places.
pub fn render_bench_table(records: &[BenchRecord]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<24} {:>10} {:>12} {:>12} | {:>8} {:>8} {:>8} {:>8} {:>10} {:>10}  note",
        "dataset", "exh best", "exh time(s)", "exh evals", "ga max", "ga mean", "ga std",
        "ga min", "ga time(s)", "ga evals"
    );
    for r in records {
        let _ = writeln!(
            out,
            "{:<24} {:>10} {:>12} {:>12} | {:>8} {:>8} {:>8} {:>8} {:>10} {:>10}  {}",
            r.dataset,
            fmt4(&r.exhaustive_best),
            r.exhaustive_time_s
                .map_or_else(|| "N/A".into(), |v| format!("{v:.4}")),
            opt_cell(&r.exhaustive_evals),
            fmt4(&r.ga_max),
            fmt4(&r.ga_mean),
            fmt4(&r.ga_std),
            fmt4(&r.ga_min),
            r.ga_time_s.map_or_else(|| "N/A".into(), |v| format!("{v:.4}")),
            opt_cell(&r.ga_evals),
            r.note
        );
    }
    out
}
