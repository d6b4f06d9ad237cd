//! Experiment configuration.
//!
//! A single TOML file covers every knob of the three studies; unknown keys
//! are rejected. Defaults reproduce the desk-scale benchmarks. The effective
//! configuration is echoed into each run's `manifest.toml`, and re-parsing
//! that manifest yields the same configuration value.

use crate::error::{Error, Result};
use crate::index::Family;
use crate::solver::SolverSettings;
use crate::synthdata::{LineDatasetSpec, SeismicNoiseSpec};
use serde::{Deserialize, Serialize};
use std::path::Path;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Config {
    /// Base seed mixed into every derived random stream.
    pub seed: u64,
    /// Output directory for CSV tables, manifests and plots.
    pub out_dir: Option<String>,
    pub solver: SolverSettings,
    pub line: LineDatasetSpec,
    pub linefit: LinefitConfig,
    pub seismic: SeismicConfig,
    pub noise: SeismicNoiseSpec,
    pub psi: PsiConfig,
    pub sweep: SweepConfig,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: 42,
            out_dir: None,
            solver: SolverSettings::default(),
            line: LineDatasetSpec::default(),
            linefit: LinefitConfig::default(),
            seismic: SeismicConfig::default(),
            noise: SeismicNoiseSpec::default(),
            psi: PsiConfig::default(),
            sweep: SweepConfig::default(),
        }
    }
}

/// Line-fit index sweep settings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct LinefitConfig {
    pub families: Vec<Family>,
    /// Uniformly spaced index values per family, conventional end included.
    pub index_count: usize,
    pub seeds: Vec<u64>,
    /// The line problem is tiny, so it gets a deeper iteration budget than
    /// the seismic protocol.
    pub max_iterations: usize,
}

impl Default for LinefitConfig {
    fn default() -> Self {
        LinefitConfig {
            families: vec![Family::Renyi, Family::Tsallis, Family::Kaniadakis],
            index_count: 200,
            seeds: (1..=10).collect(),
            max_iterations: 50,
        }
    }
}

/// Synthetic (or loaded) impedance model and acquisition settings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SeismicConfig {
    /// Trace length in samples; ignored when `model_file` is given.
    pub n_model: usize,
    /// Sampling interval in seconds.
    pub dt: f64,
    /// Ricker wavelet peak frequency in Hz.
    pub peak_frequency_hz: f64,
    /// Layered benchmark model: (thickness in samples, impedance) pairs.
    /// Empty means the built-in default model.
    pub layers: Vec<(usize, f64)>,
    /// Optional external impedance model file (plain `n dt` or `index,z` CSV).
    pub model_file: Option<String>,
    /// Moving-average window for the initial model, as a fraction of the
    /// trace length.
    pub smoothing_window_fraction: f64,
}

impl Default for SeismicConfig {
    fn default() -> Self {
        SeismicConfig {
            n_model: 512,
            dt: 1e-3,
            peak_frequency_hz: 55.0,
            layers: Vec::new(),
            model_file: None,
            smoothing_window_fraction: 0.1,
        }
    }
}

/// A single post-stack inversion run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct PsiConfig {
    pub family: Family,
    pub index: f64,
    /// Seed entry, matching one value of `sweep.seeds`.
    pub seed: u64,
}

impl Default for PsiConfig {
    fn default() -> Self {
        PsiConfig {
            family: Family::Kaniadakis,
            index: 0.6666,
            seed: 1,
        }
    }
}

/// Contamination × index sweep settings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SweepConfig {
    pub families: Vec<Family>,
    pub index_count: usize,
    pub contaminations: Vec<f64>,
    pub seeds: Vec<u64>,
    /// Worker threads: 0 uses all cores, 1 runs strictly serially.
    pub threads: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            families: vec![Family::Renyi, Family::Tsallis, Family::Kaniadakis],
            index_count: 20,
            contaminations: (0..=8).map(|i| i as f64 / 10.0).collect(),
            seeds: vec![1, 2, 3],
            threads: 0,
        }
    }
}

impl Config {
    pub fn from_toml_str(text: &str, origin: &str) -> Result<Self> {
        let config: Config = toml::from_str(text).map_err(|e| Error::Parse {
            path: origin.to_string(),
            reason: e.to_string(),
        })?;
        config.validate()?;
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
            path: path.display().to_string(),
            reason: e.to_string(),
        })?;
        Self::from_toml_str(&text, &path.display().to_string())
    }

    pub fn to_toml_string(&self) -> Result<String> {
        toml::to_string_pretty(self).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn validate(&self) -> Result<()> {
        self.solver.validate()?;
        self.line.validate()?;
        self.noise.validate()?;
        if self.linefit.index_count < 1 || self.sweep.index_count < 1 {
            return Err(Error::Config("index_count must be at least 1".into()));
        }
        if self.linefit.seeds.is_empty() || self.sweep.seeds.is_empty() {
            return Err(Error::Config("seed lists must not be empty".into()));
        }
        if self.seismic.n_model < 2 {
            return Err(Error::Config(format!(
                "seismic.n_model must be at least 2, got {}",
                self.seismic.n_model
            )));
        }
        if !(0.0..=1.0).contains(&self.seismic.smoothing_window_fraction) {
            return Err(Error::Config(
                "seismic.smoothing_window_fraction must lie in [0, 1]".into(),
            ));
        }
        for &c in &self.sweep.contaminations {
            if !(0.0..=0.8).contains(&c) {
                return Err(Error::Config(format!(
                    "sweep contamination {c} outside [0, 0.8]"
                )));
            }
        }
        for family in self.sweep.families.iter().chain(&self.linefit.families) {
            // grids must stay inside the objective-valid range
            let (lo, hi) = family.sweep_range();
            crate::index::EntropicIndex::new(*family, lo)
                .and_then(|i| i.validate_for_objective().map(|_| i))
                .map_err(|e| Error::Config(format!("family {family}: {e}")))?;
            crate::index::EntropicIndex::new(*family, hi)
                .and_then(|i| i.validate_for_objective().map(|_| i))
                .map_err(|e| Error::Config(format!("family {family}: {e}")))?;
        }
        crate::index::EntropicIndex::new(self.psi.family, self.psi.index)
            .and_then(|i| i.validate_for_objective().map(|_| i))
            .map_err(|e| Error::Config(format!("psi index: {e}")))?;
        Ok(())
    }

    /// Uniform index grid over a family's sweep range. Both endpoints are
    /// exact, so the conventional and limit values can be looked up by
    /// equality in the result tables.
    pub fn index_grid(family: Family, count: usize) -> Vec<f64> {
        let (lo, hi) = family.sweep_range();
        if count == 1 || lo == hi {
            return vec![hi];
        }
        (0..count)
            .map(|i| {
                if i == count - 1 {
                    hi
                } else {
                    lo + (hi - lo) * i as f64 / (count - 1) as f64
                }
            })
            .collect()
    }
}
