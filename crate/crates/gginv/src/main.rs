//! Thin command-line driver around the experiment harness.
//!
//! Exit codes: 0 success, 2 configuration error, 3 runtime failure.

use clap::{Parser, Subcommand};
use gginv::experiment::{self, Config};
use gginv::{Error, Family};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "gginv",
    about = "Outlier-resistant inversion with Renyi, Tsallis and Kaniadakis error laws",
    version
)]
struct Cli {
    /// Configuration file (TOML); omitted fields take the desk-scale defaults.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Base seed for every derived random stream.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Output directory for CSV tables, manifests and plots.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Statistic family for single runs (and family filter for sweeps):
    /// gaussian, renyi, tsallis or kaniadakis.
    #[arg(long, global = true, value_parser = parse_family)]
    family: Option<Family>,

    /// Entropic index value for single runs.
    #[arg(long, global = true)]
    index: Option<f64>,

    /// Spike contamination fraction for single runs.
    #[arg(long, global = true)]
    contamination: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Line-fit index sweep: fit a contaminated line with every family.
    Linefit,
    /// One post-stack impedance inversion.
    Psi,
    /// Contamination × index sweep with Pearson-R heatmap data.
    Sweep,
    /// Render plots from the CSV tables in the output directory.
    Plot,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse::<Family>().map_err(|e| e.to_string())
}

fn effective_config(cli: &Cli) -> Result<Config, Error> {
    let mut config = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    if let Some(seed) = cli.seed {
        config.seed = seed;
    }
    if let Some(out) = &cli.out {
        config.out_dir = Some(out.display().to_string());
    }
    if let Some(family) = cli.family {
        config.psi.family = family;
        config.sweep.families = vec![family];
        config.linefit.families = vec![family];
        // the index default must stay consistent with the family override
        if cli.index.is_none() {
            config.psi.index = family.limit_value();
        }
    }
    if let Some(index) = cli.index {
        config.psi.index = index;
    }
    if let Some(c) = cli.contamination {
        config.noise.spike_fraction = c;
    }
    config.validate()?;
    Ok(config)
}

fn out_dir(config: &Config) -> PathBuf {
    PathBuf::from(config.out_dir.clone().unwrap_or_else(|| "out".into()))
}

fn run(cli: &Cli) -> Result<(), Error> {
    let config = effective_config(cli)?;
    let dir = out_dir(&config);

    match cli.command {
        Command::Linefit => {
            let result = experiment::run_linefit(&config)?;
            let path = experiment::write_file(&dir, experiment::LINEFIT_CSV, &experiment::linefit_csv(&result))?;
            experiment::write_manifest(&dir, &config)?;
            for family in &config.linefit.families {
                if let (Some((best_index, best_mae)), Some(conv)) =
                    (result.best_index(*family), result.conventional_mae(*family))
                {
                    println!(
                        "{family}: best MAE {best_mae:.4} at index {best_index:.4}; conventional MAE {conv:.4}"
                    );
                }
            }
            println!("wrote {}", path.display());
        }
        Command::Psi => {
            let outcome = experiment::run_psi(&config)?;
            experiment::write_file(&dir, experiment::PSI_MODEL_CSV, &experiment::psi_model_csv(&outcome))?;
            experiment::write_manifest(&dir, &config)?;
            experiment::trace_overlay_svg(&outcome, &dir.join("psi_traces.svg"))?;
            println!(
                "family {} index {}: R = {:.4}, MAE = {:.4}, iterations = {}, stop = {}",
                config.psi.family,
                config.psi.index,
                outcome.report.pearson_r,
                outcome.report.mae,
                outcome.estimate.iterations_used,
                outcome.estimate.stop_reason,
            );
            println!("wrote {}", dir.join(experiment::PSI_MODEL_CSV).display());
        }
        Command::Sweep => {
            let result = experiment::run_heatmap_sweep(&config)?;
            let path = experiment::write_file(&dir, experiment::SWEEP_CSV, &experiment::sweep_csv(&result))?;
            experiment::write_manifest(&dir, &config)?;
            for family in &config.sweep.families {
                let limit = family.limit_value();
                let worst = config
                    .sweep
                    .contaminations
                    .iter()
                    .filter_map(|&c| result.median_r(*family, limit, c))
                    .fold(f64::INFINITY, f64::min);
                println!("{family}: worst median R at the limit index = {worst:.4}");
            }
            for family in &config.sweep.families {
                let path = dir.join(format!("heatmap_{family}.svg"));
                experiment::heatmap_svg(&result, *family, &path)?;
            }
            println!("wrote {}", path.display());
        }
        Command::Plot => {
            let produced = experiment::emit_plots(&dir, &config)?;
            for p in &produced {
                println!("wrote {}", p.display());
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_config() {
                ExitCode::from(2)
            } else {
                ExitCode::from(3)
            }
        }
    }
}
