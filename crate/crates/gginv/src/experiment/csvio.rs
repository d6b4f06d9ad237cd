//! CSV tables and run manifests.
//!
//! CSVs are the stable record of every experiment: column order is fixed and
//! float formatting uses the shortest round-trip representation, so a given
//! config and seed always produce byte-identical files.

use super::config::Config;
use super::linefit::{LinefitResult, LinefitRow};
use super::psi::PsiOutcome;
use super::sweep::{SweepResult, SweepRow};
use crate::error::{Error, Result};
use crate::index::Family;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

pub const LINEFIT_CSV: &str = "linefit.csv";
pub const SWEEP_CSV: &str = "sweep.csv";
pub const PSI_MODEL_CSV: &str = "psi_model.csv";
pub const MANIFEST: &str = "manifest.toml";

/// Render the line-fit table: `family,index,seed,m1,m2,dm1,dm2,mae`.
pub fn linefit_csv(result: &LinefitResult) -> String {
    let mut out = String::from("family,index,seed,m1,m2,dm1,dm2,mae\n");
    for r in &result.rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.family, r.index, r.seed, r.m1, r.m2, r.dm1, r.dm2, r.mae
        )
        .expect("string write");
    }
    out
}

/// Render the sweep table:
/// `family,index,contamination,seed,pearson_r,mae,iterations,stop_reason`.
pub fn sweep_csv(result: &SweepResult) -> String {
    let mut out = String::from("family,index,contamination,seed,pearson_r,mae,iterations,stop_reason\n");
    for r in &result.rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.family, r.index, r.contamination, r.seed, r.pearson_r, r.mae, r.iterations, r.stop_reason
        )
        .expect("string write");
    }
    out
}

/// Render the recovered-model table: `sample,z_true,z_init,z_rec`.
pub fn psi_model_csv(outcome: &PsiOutcome) -> String {
    let mut out = String::from("sample,z_true,z_init,z_rec\n");
    for i in 0..outcome.z_true.len() {
        writeln!(
            out,
            "{},{},{},{}",
            i, outcome.z_true[i], outcome.z_init[i], outcome.z_rec[i]
        )
        .expect("string write");
    }
    out
}

pub fn write_file(dir: &Path, name: &str, contents: &str) -> Result<PathBuf> {
    std::fs::create_dir_all(dir)?;
    let path = dir.join(name);
    std::fs::write(&path, contents)?;
    Ok(path)
}

/// Echo the effective configuration into the run manifest.
pub fn write_manifest(dir: &Path, config: &Config) -> Result<PathBuf> {
    write_file(dir, MANIFEST, &config.to_toml_string()?)
}

fn parse_f64(cell: &str, path: &Path) -> Result<f64> {
    if cell == "NaN" {
        return Ok(f64::NAN);
    }
    cell.parse().map_err(|e| Error::Parse {
        path: path.display().to_string(),
        reason: format!("bad number '{cell}': {e}"),
    })
}

/// Read a sweep table back, e.g. for re-plotting.
pub fn read_sweep_csv(path: &Path) -> Result<SweepResult> {
    let text = std::fs::read_to_string(path)?;
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate().skip(1) {
        if line.trim().is_empty() {
            continue;
        }
        let cells: Vec<&str> = line.split(',').collect();
        if cells.len() != 8 {
            return Err(Error::Parse {
                path: path.display().to_string(),
                reason: format!("line {}: expected 8 columns, got {}", lineno + 1, cells.len()),
            });
        }
        rows.push(SweepRow {
            family: cells[0].parse::<Family>()?,
            index: parse_f64(cells[1], path)?,
            contamination: parse_f64(cells[2], path)?,
            seed: cells[3].parse().map_err(|e| Error::Parse {
                path: path.display().to_string(),
                reason: format!("bad seed: {e}"),
            })?,
            pearson_r: parse_f64(cells[4], path)?,
            mae: parse_f64(cells[5], path)?,
            iterations: cells[6].parse().map_err(|e| Error::Parse {
                path: path.display().to_string(),
                reason: format!("bad iteration count: {e}"),
            })?,
            stop_reason: cells[7].to_string(),
        });
    }
    Ok(SweepResult { rows })
}

/// Read a line-fit table back.
pub fn read_linefit_csv(path: &Path) -> Result<LinefitResult> {
    let text = std::fs::read_to_string(path)?;
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate().skip(1) {
        if line.trim().is_empty() {
            continue;
        }
        let cells: Vec<&str> = line.split(',').collect();
        if cells.len() != 8 {
            return Err(Error::Parse {
                path: path.display().to_string(),
                reason: format!("line {}: expected 8 columns, got {}", lineno + 1, cells.len()),
            });
        }
        rows.push(LinefitRow {
            family: cells[0].parse::<Family>()?,
            index: parse_f64(cells[1], path)?,
            seed: cells[2].parse().map_err(|e| Error::Parse {
                path: path.display().to_string(),
                reason: format!("bad seed: {e}"),
            })?,
            m1: parse_f64(cells[3], path)?,
            m2: parse_f64(cells[4], path)?,
            dm1: parse_f64(cells[5], path)?,
            dm2: parse_f64(cells[6], path)?,
            mae: parse_f64(cells[7], path)?,
            iterations: 0,
            stop_reason: crate::solver::StopReason::MaxIterations,
        });
    }
    Ok(LinefitResult { rows })
}
