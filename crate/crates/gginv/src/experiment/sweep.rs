//! Contamination × index sweep over the post-stack problem.
//!
//! Every (contamination, seed) scenario synthesizes one observed dataset;
//! every (family, index) cell inverts that same data. Cells are independent
//! and run on a bounded worker pool; row order is fixed by cell enumeration,
//! so serial and concurrent runs produce identical tables.

use super::config::Config;
use super::psi::{build_psi_setup, invert_on_setup, psi_data_seed, PsiSetup};
use crate::error::{Error, Result};
use crate::index::{EntropicIndex, Family};
use crate::solver::StopReason;
use crate::synthdata::{contaminate_seismic, SeismicNoiseSpec};
use rayon::prelude::*;

/// Sweep specification: one family's index grid × contamination grid × seeds.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentGrid {
    pub family: Family,
    pub index_values: Vec<f64>,
    pub contamination_fractions: Vec<f64>,
    pub seeds: Vec<u64>,
}

impl ExperimentGrid {
    pub fn from_config(config: &Config, family: Family) -> Self {
        ExperimentGrid {
            family,
            index_values: Config::index_grid(family, config.sweep.index_count),
            contamination_fractions: config.sweep.contaminations.clone(),
            seeds: config.sweep.seeds.clone(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        for &v in &self.index_values {
            EntropicIndex::new(self.family, v)?.validate_for_objective()?;
        }
        for &c in &self.contamination_fractions {
            if !(0.0..=0.8).contains(&c) {
                return Err(Error::Config(format!("contamination {c} outside [0, 0.8]")));
            }
        }
        if self.index_values.is_empty() || self.contamination_fractions.is_empty() || self.seeds.is_empty()
        {
            return Err(Error::Config("sweep grid has an empty axis".into()));
        }
        Ok(())
    }

    pub fn cell_count(&self) -> usize {
        self.index_values.len() * self.contamination_fractions.len() * self.seeds.len()
    }
}

/// One sweep cell's record.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub family: Family,
    pub index: f64,
    pub contamination: f64,
    pub seed: u64,
    pub pearson_r: f64,
    pub mae: f64,
    pub iterations: usize,
    /// Solver stop reason, or "failure" when the cell errored.
    pub stop_reason: String,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct SweepResult {
    pub rows: Vec<SweepRow>,
}

impl SweepResult {
    /// Median Pearson R over seeds at one (family, index, contamination).
    pub fn median_r(&self, family: Family, index: f64, contamination: f64) -> Option<f64> {
        let mut values: Vec<f64> = self
            .rows
            .iter()
            .filter(|r| {
                r.family == family
                    && r.index == index
                    && r.contamination == contamination
                    && r.pearson_r.is_finite()
            })
            .map(|r| r.pearson_r)
            .collect();
        if values.is_empty() {
            return None;
        }
        values.sort_by(f64::total_cmp);
        let mid = values.len() / 2;
        Some(if values.len() % 2 == 1 {
            values[mid]
        } else {
            0.5 * (values[mid - 1] + values[mid])
        })
    }
}

struct Cell {
    family: Family,
    index: f64,
    contamination_idx: usize,
    seed_idx: usize,
}

/// Run the sweep for every configured family. Per-cell failures are recorded
/// in the row's stop_reason; they never abort the sweep.
pub fn run_heatmap_sweep(config: &Config) -> Result<SweepResult> {
    config.validate()?;
    let setup = build_psi_setup(&config.seismic)?;

    let contaminations = &config.sweep.contaminations;
    let seeds = &config.sweep.seeds;

    // one observed dataset per (contamination, seed) scenario, shared by
    // every family and index
    let mut observed = Vec::with_capacity(contaminations.len() * seeds.len());
    for &c in contaminations {
        for &s in seeds {
            let noise = SeismicNoiseSpec {
                spike_fraction: c,
                ..config.noise.clone()
            };
            let d_obs = contaminate_seismic(&setup.d_clean, &noise, psi_data_seed(config.seed, s, c))?;
            observed.push(d_obs);
        }
    }
    let data_for = |cell: &Cell| &observed[cell.contamination_idx * seeds.len() + cell.seed_idx];

    let mut cells = Vec::new();
    for &family in &config.sweep.families {
        let grid = ExperimentGrid::from_config(config, family);
        grid.validate()?;
        for &index in &grid.index_values {
            for ci in 0..contaminations.len() {
                for si in 0..seeds.len() {
                    cells.push(Cell {
                        family,
                        index,
                        contamination_idx: ci,
                        seed_idx: si,
                    });
                }
            }
        }
    }

    let run_cell = |cell: &Cell| -> SweepRow {
        let contamination = contaminations[cell.contamination_idx];
        let seed = seeds[cell.seed_idx];
        let outcome = EntropicIndex::new(cell.family, cell.index)
            .and_then(|index| invert_on_setup(&setup, data_for(cell), &index, &config.solver));
        match outcome {
            Ok((estimate, report)) => SweepRow {
                family: cell.family,
                index: cell.index,
                contamination,
                seed,
                pearson_r: report.pearson_r,
                mae: report.mae,
                iterations: estimate.iterations_used,
                stop_reason: match estimate.stop_reason {
                    StopReason::Tolerance => "tolerance".into(),
                    StopReason::MaxIterations => "max_iterations".into(),
                    StopReason::LineSearchFailure => "line_search_failure".into(),
                },
            },
            Err(_) => SweepRow {
                family: cell.family,
                index: cell.index,
                contamination,
                seed,
                pearson_r: f64::NAN,
                mae: f64::NAN,
                iterations: 0,
                stop_reason: "failure".into(),
            },
        }
    };

    let rows: Vec<SweepRow> = if config.sweep.threads == 1 {
        cells.iter().map(run_cell).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.sweep.threads)
            .build()
            .map_err(|e| Error::Config(format!("worker pool: {e}")))?;
        pool.install(|| cells.par_iter().map(run_cell).collect())
    };

    Ok(SweepResult { rows })
}

/// Access to the shared setup for callers that need the clean data (plots,
/// consistency tests).
pub fn sweep_setup(config: &Config) -> Result<PsiSetup> {
    build_psi_setup(&config.seismic)
}
