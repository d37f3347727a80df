//! Entropy scans over grown and random subsystems.
//!
//! Every sample draws from its own ChaCha stream derived from the master
//! seed, so results do not depend on the worker count.

mod csv;
mod fit;

pub use csv::{format_csv, write_csv, CSV_HEADER};
pub use fit::{fit_power_law, PowerFit};

use rayon::prelude::*;
use rayon::ThreadPool;

use crate::codes::CssCode;
use crate::entropy::{rank_split, Bipartition};
use crate::error::{Error, Result};
use crate::gf2::rank;
use crate::sampling::{grown_subsystem_sequence_with, random_subsystem_with, seeded_rng};

/// Entropy statistics at one subsystem size.
#[derive(Clone, Debug, PartialEq)]
pub struct ScanRecord {
    pub n_a: usize,
    pub samples: usize,
    pub mean_s: f64,
    pub std_s: f64,
    /// `n_a − mean_s`.
    pub i_a: f64,
    pub di_dn: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScalingResult {
    pub records: Vec<ScanRecord>,
    pub fit: Option<PowerFit>,
}

fn pool(workers: usize) -> Result<ThreadPool> {
    if workers == 0 {
        return Err(Error::param("worker count must be at least 1"));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::param(format!("cannot start worker pool: {e}")))
}

/// Mean and sample standard deviation.
fn mean_std(values: &[f64]) -> (f64, f64) {
    let n = values.len();
    if n == 0 {
        return (0.0, 0.0);
    }
    let mean = values.iter().sum::<f64>() / n as f64;
    if n < 2 {
        return (mean, 0.0);
    }
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1) as f64;
    (mean, var.sqrt())
}

fn record(n_a: usize, values: &[f64]) -> ScanRecord {
    let (mean_s, std_s) = mean_std(values);
    ScanRecord {
        n_a,
        samples: values.len(),
        mean_s,
        std_s,
        i_a: n_a as f64 - mean_s,
        di_dn: None,
    }
}

/// Fills `di_dn` by central differences over the actual grid spacing, with
/// one-sided differences at the ends.
pub fn fill_derivative(records: &mut [ScanRecord]) {
    let len = records.len();
    if len < 2 {
        return;
    }
    let slope = |a: &ScanRecord, b: &ScanRecord| (b.i_a - a.i_a) / (b.n_a as f64 - a.n_a as f64);
    let values: Vec<f64> = (0..len)
        .map(|i| {
            let lo = i.saturating_sub(1);
            let hi = (i + 1).min(len - 1);
            slope(&records[lo], &records[hi])
        })
        .collect();
    for (r, v) in records.iter_mut().zip(values) {
        r.di_dn = Some(v);
    }
}

/// Averages entropy over `repeats` grown-subsystem runs and fits a power law.
///
/// The common grid is every checkpoint size that all runs reach; each run
/// contributes its largest checkpoint not above the grid value.
pub fn scaling_scan(code: &CssCode, repeats: usize, seed: u64, workers: usize) -> Result<ScalingResult> {
    if repeats == 0 {
        return Err(Error::param("at least one repeat is required"));
    }
    let hz = code.hz();
    let rank_h = rank(hz);
    let runs: Vec<Vec<(usize, f64)>> = pool(workers)?.install(|| {
        (0..repeats as u64)
            .into_par_iter()
            .map(|r| {
                let mut rng = seeded_rng(seed, r);
                grown_subsystem_sequence_with(code, &mut rng)
                    .iter()
                    .map(|p| (p.n_a(), rank_split(hz, p, rank_h) as f64))
                    .collect()
            })
            .collect()
    });
    if runs.iter().any(Vec::is_empty) {
        return Ok(ScalingResult {
            records: Vec::new(),
            fit: None,
        });
    }
    let lo = runs.iter().map(|r| r[0].0).max().expect("nonempty");
    let hi = runs.iter().map(|r| r[r.len() - 1].0).min().expect("nonempty");
    let mut grid: Vec<usize> = runs
        .iter()
        .flatten()
        .map(|&(n_a, _)| n_a)
        .filter(|&n_a| n_a >= lo && n_a <= hi)
        .collect();
    grid.sort_unstable();
    grid.dedup();

    let mut records: Vec<ScanRecord> = grid
        .iter()
        .map(|&g| {
            let values: Vec<f64> = runs
                .iter()
                .map(|run| {
                    let idx = run.partition_point(|&(n_a, _)| n_a <= g) - 1;
                    run[idx].1
                })
                .collect();
            record(g, &values)
        })
        .collect();
    fill_derivative(&mut records);
    let points: Vec<(f64, f64)> = records
        .iter()
        .filter(|r| r.mean_s > 0.0 && 2 * r.n_a < code.n())
        .map(|r| (r.n_a as f64, r.mean_s))
        .collect();
    Ok(ScalingResult {
        fit: fit_power_law(&points),
        records,
    })
}

/// Mean entropy over `samples` uniformly random subsystems at each grid size.
pub fn discrepancy_scan(
    code: &CssCode,
    grid: &[usize],
    samples: usize,
    seed: u64,
    workers: usize,
) -> Result<Vec<ScanRecord>> {
    let n = code.n();
    if let Some(&g) = grid.iter().find(|&&g| g > n) {
        return Err(Error::param(format!("grid value {g} exceeds {n} qubits")));
    }
    let hz = code.hz();
    let rank_h = rank(hz);
    let jobs: Vec<(usize, usize)> = (0..grid.len())
        .flat_map(|i| (0..samples).map(move |j| (i, j)))
        .collect();
    let values: Vec<f64> = pool(workers)?.install(|| {
        jobs.par_iter()
            .map(|&(i, j)| {
                let mut rng = seeded_rng(seed, ((i as u64) << 32) | j as u64);
                let part: Bipartition = random_subsystem_with(n, grid[i], &mut rng).expect("checked size");
                rank_split(hz, &part, rank_h) as f64
            })
            .collect()
    });
    let mut records: Vec<ScanRecord> = grid
        .iter()
        .enumerate()
        .map(|(i, &g)| record(g, &values[i * samples..(i + 1) * samples]))
        .collect();
    fill_derivative(&mut records);
    Ok(records)
}
