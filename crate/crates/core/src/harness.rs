//! Multi-run experiments: seeded batches, across-run means, and λ sweeps.
//!
//! Run `i` of a batch uses seed `base_seed + i`. Runs execute on a rayon
//! pool but results are always collected in run order, so every aggregate is
//! independent of the worker count.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gateset::GateSet;
use crate::genetic::{evolve, FitnessParams, GaConfig, Individual, RunRecord};

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "BRAIDFORGE_THREADS";

/// Runs `f` on a dedicated pool of `threads` workers, or on the global pool for `None`.
pub fn with_workers<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(f()),
        Some(0) => Err(Error::InvalidConfig("worker count must be at least 1".into())),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::InvalidConfig(format!("cannot start worker pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

/// Reads [`THREADS_ENV`]; unset or empty means "no cap".
pub fn threads_from_env() -> Result<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Ok(v) if !v.trim().is_empty() => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .map(Some)
            .ok_or_else(|| Error::InvalidConfig(format!("{THREADS_ENV}={v:?} is not a positive integer"))),
        _ => Ok(None),
    }
}

/// Independent runs with seeds `cfg.seed, cfg.seed + 1, …`, in run order.
pub fn run_batch(
    cfg: &GaConfig,
    gs: &GateSet,
    fp: &FitnessParams,
    runs: usize,
) -> Result<Vec<RunRecord>> {
    cfg.validate()?;
    (0..runs)
        .into_par_iter()
        .map(|i| evolve(&cfg.with_seed(cfg.seed.wrapping_add(i as u64)), gs, fp))
        .collect()
}

/// One row of the across-run mean curve.
#[derive(Debug, Clone, PartialEq)]
pub struct MeanRow {
    pub generation: usize,
    pub mean_error: f64,
    pub mean_length: f64,
    pub best_error: f64,
    pub best_length: f64,
}

/// Per-generation arithmetic means over runs. All records must have the same number of rows.
pub fn mean_curve(records: &[RunRecord]) -> Result<Vec<MeanRow>> {
    let Some(first) = records.first() else {
        return Ok(Vec::new());
    };
    let rows = first.rows.len();
    if let Some(r) = records.iter().find(|r| r.rows.len() != rows) {
        return Err(Error::DimensionMismatch {
            left: rows,
            right: r.rows.len(),
        });
    }
    let n = records.len() as f64;
    Ok((0..rows)
        .map(|g| {
            let mut acc = [0.0; 4];
            for r in records {
                let row = &r.rows[g];
                acc[0] += row.mean_error;
                acc[1] += row.mean_length;
                acc[2] += row.best_error;
                acc[3] += row.best_length as f64;
            }
            MeanRow {
                generation: first.rows[g].generation,
                mean_error: acc[0] / n,
                mean_length: acc[1] / n,
                best_error: acc[2] / n,
                best_length: acc[3] / n,
            }
        })
        .collect())
}

/// The fittest final braid across runs (earliest run wins ties), with its run index.
pub fn overall_best(records: &[RunRecord]) -> Option<(usize, &Individual)> {
    records
        .iter()
        .enumerate()
        .fold(None, |acc: Option<(usize, &Individual)>, (i, r)| match acc {
            Some((_, b)) if b.fitness >= r.best.fitness => acc,
            _ => Some((i, &r.best)),
        })
}

/// Population mean and standard deviation (divides by `N`).
pub fn mean_std(values: &[f64]) -> (f64, f64) {
    if values.is_empty() {
        return (f64::NAN, f64::NAN);
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n;
    (mean, var.sqrt())
}

/// Distribution of final best braids for one value of λ.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub lambda: f64,
    pub mean_error: f64,
    pub std_error: f64,
    pub mean_length: f64,
    pub std_length: f64,
    pub runs: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSummary {
    pub rows: Vec<SweepRow>,
}

pub fn summarize_final(lambda: f64, records: &[RunRecord]) -> SweepRow {
    let errors: Vec<f64> = records.iter().map(|r| r.best.error).collect();
    let lengths: Vec<f64> = records.iter().map(|r| r.best.len() as f64).collect();
    let (mean_error, std_error) = mean_std(&errors);
    let (mean_length, std_length) = mean_std(&lengths);
    SweepRow {
        lambda,
        mean_error,
        std_error,
        mean_length,
        std_length,
        runs: records.len(),
    }
}

/// Runs a batch for each λ (same seeds for every λ) and summarizes the final bests.
pub fn sweep(
    cfg: &GaConfig,
    gs: &GateSet,
    fp: &FitnessParams,
    lambdas: &[f64],
    runs: usize,
) -> Result<SweepSummary> {
    let rows = lambdas
        .iter()
        .map(|&lambda| {
            let fp = FitnessParams::new(lambda, fp.target.clone())?;
            let records = run_batch(cfg, gs, &fp, runs)?;
            Ok(summarize_final(lambda, &records))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepSummary { rows })
}
