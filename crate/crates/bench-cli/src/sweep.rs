use std::ops::RangeInclusive;

use exhaustive::solve_exact;
use instance_io::{generate_instance, GeneratorConfig};

/// Timing sweep configuration: one cell per (individuals, groups) pair over
/// a fixed department count, `runs_per_cell` random instances each.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub individuals: RangeInclusive<usize>,
    pub groups: RangeInclusive<usize>,
    pub n_departments: usize,
    pub runs_per_cell: usize,
    pub base_seed: u64,
    /// Exhaustive-solver evaluation budget per instance.
    pub budget: Option<u64>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            individuals: 5..=12,
            groups: 2..=5,
            n_departments: 3,
            runs_per_cell: 20,
            base_seed: 0,
            budget: None,
        }
    }
}

/// One sweep cell: mean exhaustive-solver time with the single slowest and
/// single fastest run discarded as outliers.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub n_i: usize,
    pub k: usize,
    pub mean_time_s: Option<f64>,
    /// Runs contributing to the mean: total runs minus the two outliers.
    pub runs_kept: usize,
    pub note: String,
}

/// Runs the sweep. Each cell generates `runs_per_cell` instances with seeds
/// derived from `(base_seed, n_i, k, run)`, times [`solve_exact`] on each,
/// discards the single max and single min time, and averages the rest.
/// Cells whose generator config is infeasible (or that exceed the budget)
/// produce a warning record instead of aborting the sweep.
pub fn run_sweep(config: &SweepConfig) -> Result<Vec<SweepRecord>, String> {
    if config.runs_per_cell < 3 {
        return Err(format!(
            "runs_per_cell must be at least 3 to discard two outliers, got {}",
            config.runs_per_cell
        ));
    }
    if config.individuals.is_empty() || config.groups.is_empty() {
        return Err("individuals and groups ranges must be non-empty".into());
    }

    let mut records = Vec::new();
    for n_i in config.individuals.clone() {
        for k in config.groups.clone() {
            records.push(sweep_cell(config, n_i, k));
        }
    }
    Ok(records)
}

fn cell_seed(base_seed: u64, n_i: usize, k: usize, run: usize) -> u64 {
    base_seed
        .wrapping_add(n_i as u64 * 1_000_000)
        .wrapping_add(k as u64 * 10_000)
        .wrapping_add(run as u64)
}

fn sweep_cell(config: &SweepConfig, n_i: usize, k: usize) -> SweepRecord {
    let mut times = Vec::with_capacity(config.runs_per_cell);
    for run in 0..config.runs_per_cell {
        let gen_config = GeneratorConfig::new(
            n_i,
            config.n_departments,
            k,
            cell_seed(config.base_seed, n_i, k, run),
        );
        let instance = match generate_instance(&gen_config) {
            Ok(instance) => instance,
            Err(e) => {
                return SweepRecord {
                    n_i,
                    k,
                    mean_time_s: None,
                    runs_kept: 0,
                    note: format!("skipped: {e}"),
                }
            }
        };
        match solve_exact(&instance, config.budget) {
            Ok(result) => times.push(result.elapsed.as_secs_f64()),
            Err(e) => {
                return SweepRecord {
                    n_i,
                    k,
                    mean_time_s: None,
                    runs_kept: 0,
                    note: format!("skipped: {e}"),
                }
            }
        }
    }

    // Discard the single slowest and single fastest run.
    times.sort_by(|a, b| a.partial_cmp(b).expect("times are finite"));
    let kept = &times[1..times.len() - 1];
    SweepRecord {
        n_i,
        k,
        mean_time_s: Some(kept.iter().sum::<f64>() / kept.len() as f64),
        runs_kept: kept.len(),
        note: String::new(),
    }
}

const SWEEP_HEADER: [&str; 5] = ["n_i", "k", "mean_time_s", "runs_kept", "note"];

/// Writes sweep records as CSV (full float precision; absent means `N/A`).
pub fn write_sweep_csv(records: &[SweepRecord], sink: impl std::io::Write) -> csv::Result<()> {
    let mut writer = csv::Writer::from_writer(sink);
    writer.write_record(SWEEP_HEADER)?;
    for r in records {
        writer.write_record([
            r.n_i.to_string(),
            r.k.to_string(),
            r.mean_time_s.map_or_else(|| "N/A".into(), |v| v.to_string()),
            r.runs_kept.to_string(),
            r.note.clone(),
        ])?;
    }
    writer.flush()?;
    Ok(())
}

/// Reads back a sweep CSV produced by [`write_sweep_csv`].
pub fn read_sweep_csv(source: impl std::io::Read) -> Result<Vec<SweepRecord>, String> {
    let mut reader = csv::Reader::from_reader(source);
    let mut records = Vec::new();
    for row in reader.records() {
        let row = row.map_err(|e| e.to_string())?;
        if row.len() != SWEEP_HEADER.len() {
            return Err(format!("expected {} columns, got {}", SWEEP_HEADER.len(), row.len()));
        }
        let mean_time_s = if &row[2] == "N/A" {
            None
        } else {
            Some(row[2].parse::<f64>().map_err(|e| e.to_string())?)
        };
        records.push(SweepRecord {
            n_i: row[0].parse().map_err(|e: std::num::ParseIntError| e.to_string())?,
            k: row[1].parse().map_err(|e: std::num::ParseIntError| e.to_string())?,
            mean_time_s,
            runs_kept: row[3].parse().map_err(|e: std::num::ParseIntError| e.to_string())?,
            note: row[4].to_string(),
        });
    }
    Ok(records)
}
