//! Line-fit index sweep: estimate the two coefficients of a contaminated
//! linear dataset with every objective family across its index grid, and
//! compare against the ideal line.

use super::config::Config;
use crate::error::Result;
use crate::index::{EntropicIndex, Family};
use crate::metrics::mae;
use crate::operators::line_design_matrix;
use crate::solver::{minimize, InversionProblem, SolverSettings, StopReason};
use crate::synthdata::{derive_seed, generate_line_dataset, LineDataset};

const LINE_TAG: u64 = 0x6c69_6e65_6669_7400;

/// Seed of the line dataset for one seed entry.
pub fn line_data_seed(base: u64, seed_entry: u64) -> u64 {
    derive_seed(base ^ LINE_TAG, seed_entry)
}

/// One (family, index, seed) estimate.
#[derive(Debug, Clone)]
pub struct LinefitRow {
    pub family: Family,
    pub index: f64,
    pub seed: u64,
    /// Estimated slope.
    pub m1: f64,
    /// Estimated intercept.
    pub m2: f64,
    pub dm1: f64,
    pub dm2: f64,
    /// MAE between the fitted line and the ideal line over the x grid.
    pub mae: f64,
    pub iterations: usize,
    pub stop_reason: StopReason,
}

#[derive(Debug, Clone, Default)]
pub struct LinefitResult {
    pub rows: Vec<LinefitRow>,
}

impl LinefitResult {
    /// Mean MAE over seeds at each (family, index), returned sorted by index.
    pub fn mean_mae_by_index(&self, family: Family) -> Vec<(f64, f64)> {
        let mut grouped: Vec<(f64, f64, usize)> = Vec::new();
        for row in self.rows.iter().filter(|r| r.family == family) {
            match grouped.iter_mut().find(|(i, _, _)| *i == row.index) {
                Some((_, sum, n)) => {
                    *sum += row.mae;
                    *n += 1;
                }
                None => grouped.push((row.index, row.mae, 1)),
            }
        }
        grouped.sort_by(|a, b| a.0.total_cmp(&b.0));
        grouped
            .into_iter()
            .map(|(i, sum, n)| (i, sum / n as f64))
            .collect()
    }

    /// The index with the lowest seed-averaged MAE for a family.
    pub fn best_index(&self, family: Family) -> Option<(f64, f64)> {
        self.mean_mae_by_index(family)
            .into_iter()
            .min_by(|a, b| a.1.total_cmp(&b.1))
    }

    /// Seed-averaged MAE at the family's conventional index.
    pub fn conventional_mae(&self, family: Family) -> Option<f64> {
        let conv = family.conventional_value();
        self.mean_mae_by_index(family)
            .into_iter()
            .find(|(i, _)| *i == conv)
            .map(|(_, m)| m)
    }
}

/// Fit one dataset with one index.
pub fn fit_line(
    dataset: &LineDataset,
    index: &EntropicIndex,
    settings: &SolverSettings,
) -> Result<(f64, f64, usize, StopReason)> {
    let operator = line_design_matrix(&dataset.x)?;
    let problem = InversionProblem::new(
        &dataset.d_obs,
        &operator,
        *index,
        vec![0.0, 0.0],
        *settings,
    )?;
    let estimate = minimize(&problem)?;
    Ok((
        estimate.model[0],
        estimate.model[1],
        estimate.iterations_used,
        estimate.stop_reason,
    ))
}

/// Run the full index sweep over the configured families and seeds.
pub fn run_linefit(config: &Config) -> Result<LinefitResult> {
    config.validate()?;
    let settings = SolverSettings {
        max_iterations: config.linefit.max_iterations,
        ..config.solver
    };
    let mut rows = Vec::new();
    for &seed_entry in &config.linefit.seeds {
        let dataset = generate_line_dataset(&config.line, line_data_seed(config.seed, seed_entry))?;
        for &family in &config.linefit.families {
            for index_value in Config::index_grid(family, config.linefit.index_count) {
                let index = EntropicIndex::new(family, index_value)?;
                let (m1, m2, iterations, stop_reason) = fit_line(&dataset, &index, &settings)?;
                let fitted: Vec<f64> = dataset.x.iter().map(|x| m1 * x + m2).collect();
                rows.push(LinefitRow {
                    family,
                    index: index_value,
                    seed: seed_entry,
                    m1,
                    m2,
                    dm1: m1 - config.line.m1,
                    dm2: m2 - config.line.m2,
                    mae: mae(&fitted, &dataset.d_true)?,
                    iterations,
                    stop_reason,
                });
            }
        }
    }
    Ok(LinefitResult { rows })
}
