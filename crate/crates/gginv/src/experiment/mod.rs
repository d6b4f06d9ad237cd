//! Experiment harness: the line-fit index sweep, single post-stack
//! inversions, the contamination × index sweep, and their CSV/plot outputs.

mod config;
mod csvio;
mod linefit;
mod plots;
mod psi;
mod sweep;

pub use config::{Config, LinefitConfig, PsiConfig, SeismicConfig, SweepConfig};
pub use csvio::{
    linefit_csv, psi_model_csv, read_linefit_csv, read_sweep_csv, sweep_csv, write_file,
    write_manifest, LINEFIT_CSV, MANIFEST, PSI_MODEL_CSV, SWEEP_CSV,
};
pub use linefit::{fit_line, line_data_seed, run_linefit, LinefitResult, LinefitRow};
pub use plots::{
    emit_plots, heatmap_svg, linefit_deviation_svg, linefit_scatter_svg, trace_overlay_svg,
    PLOT_MANIFEST,
};
pub use psi::{build_psi_setup, invert_on_setup, psi_data_seed, run_psi, PsiOutcome, PsiSetup};
pub use sweep::{run_heatmap_sweep, sweep_setup, ExperimentGrid, SweepResult, SweepRow};
