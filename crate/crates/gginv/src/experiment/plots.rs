//! Static SVG plots of the experiment outputs.
//!
//! Plots are presentation artifacts; the CSV tables are the stable record.

use super::config::Config;
use super::csvio;
use super::linefit::LinefitResult;
use super::psi::PsiOutcome;
use super::sweep::SweepResult;
use crate::error::{Error, Result};
use crate::index::Family;
use crate::synthdata::LineDataset;
use plotters::prelude::*;
use plotters::style::colors::colormaps::ViridisRGB;
use std::path::{Path, PathBuf};

pub const PLOT_MANIFEST: &str = "plot_manifest.txt";

fn plot_err<E: std::fmt::Display>(e: E) -> Error {
    Error::Plot(e.to_string())
}

/// Correlation heatmap (index × contamination) for one family, with the
/// R = 0.9 level marked in white.
pub fn heatmap_svg(result: &SweepResult, family: Family, path: &Path) -> Result<()> {
    let mut indices: Vec<f64> = Vec::new();
    let mut conts: Vec<f64> = Vec::new();
    for r in result.rows.iter().filter(|r| r.family == family) {
        if !indices.contains(&r.index) {
            indices.push(r.index);
        }
        if !conts.contains(&r.contamination) {
            conts.push(r.contamination);
        }
    }
    if indices.is_empty() {
        return Err(Error::Plot(format!("no sweep rows for family {family}")));
    }
    indices.sort_by(f64::total_cmp);
    conts.sort_by(f64::total_cmp);

    let root = SVGBackend::new(path, (900, 620)).into_drawing_area();
    root.fill(&WHITE).map_err(plot_err)?;
    let (lo_i, hi_i) = (indices[0], *indices.last().unwrap());
    let (lo_c, hi_c) = (conts[0], *conts.last().unwrap());
    let di = if indices.len() > 1 { (hi_i - lo_i) / (indices.len() - 1) as f64 } else { 1.0 };
    let dc = if conts.len() > 1 { (hi_c - lo_c) / (conts.len() - 1) as f64 } else { 0.1 };

    let mut chart = ChartBuilder::on(&root)
        .margin(12)
        .caption(
            format!("median Pearson R — {family}"),
            ("sans-serif", 22),
        )
        .x_label_area_size(42)
        .y_label_area_size(56)
        .build_cartesian_2d(
            (lo_i - di / 2.0)..(hi_i + di / 2.0),
            (lo_c - dc / 2.0)..(hi_c + dc / 2.0),
        )
        .map_err(plot_err)?;
    chart
        .configure_mesh()
        .disable_mesh()
        .x_desc("entropic index")
        .y_desc("spike contamination fraction")
        .draw()
        .map_err(plot_err)?;

    let mut medians = Vec::new();
    for &c in &conts {
        for &i in &indices {
            let r = result.median_r(family, i, c).unwrap_or(f64::NAN);
            medians.push((i, c, r));
        }
    }
    chart
        .draw_series(medians.iter().map(|&(i, c, r)| {
            let color = if r.is_finite() {
                // map [-1, 1] onto the colormap
                ViridisRGB::get_color(((r + 1.0) / 2.0).clamp(0.0, 1.0))
            } else {
                RGBColor(120, 120, 120)
            };
            Rectangle::new(
                [(i - di / 2.0, c - dc / 2.0), (i + di / 2.0, c + dc / 2.0)],
                color.filled(),
            )
        }))
        .map_err(plot_err)?;

    // mark the R = 0.9 level: linear crossings between adjacent cells
    let mut marks = Vec::new();
    for &c in &conts {
        for w in indices.windows(2) {
            let (r0, r1) = (
                result.median_r(family, w[0], c).unwrap_or(f64::NAN),
                result.median_r(family, w[1], c).unwrap_or(f64::NAN),
            );
            if r0.is_finite() && r1.is_finite() && (r0 - 0.9) * (r1 - 0.9) <= 0.0 && r0 != r1 {
                let t = (0.9 - r0) / (r1 - r0);
                marks.push((w[0] + t * (w[1] - w[0]), c));
            }
        }
    }
    chart
        .draw_series(marks.iter().map(|&(i, c)| Circle::new((i, c), 4, WHITE.filled())))
        .map_err(plot_err)?;
    root.present().map_err(plot_err)?;
    Ok(())
}

/// Seed-averaged parameter deviations and MAE against the index, one curve
/// per family.
pub fn linefit_deviation_svg(result: &LinefitResult, path: &Path) -> Result<()> {
    let families: Vec<Family> = {
        let mut fams = Vec::new();
        for r in &result.rows {
            if !fams.contains(&r.family) {
                fams.push(r.family);
            }
        }
        fams
    };
    if families.is_empty() {
        return Err(Error::Plot("no line-fit rows to plot".into()));
    }
    let root = SVGBackend::new(path, (900, 620)).into_drawing_area();
    root.fill(&WHITE).map_err(plot_err)?;
    let max_mae = result.rows.iter().map(|r| r.mae).fold(0.0f64, f64::max);
    let mut chart = ChartBuilder::on(&root)
        .margin(12)
        .caption("seed-averaged MAE vs entropic index", ("sans-serif", 22))
        .x_label_area_size(42)
        .y_label_area_size(56)
        .build_cartesian_2d(0.0..3.0, 0.0..(max_mae * 1.05).max(1e-6))
        .map_err(plot_err)?;
    chart
        .configure_mesh()
        .x_desc("entropic index")
        .y_desc("MAE to the ideal line")
        .draw()
        .map_err(plot_err)?;
    let palette = [RED, BLUE, GREEN, MAGENTA];
    for (k, &family) in families.iter().enumerate() {
        let series = result.mean_mae_by_index(family);
        let color = palette[k % palette.len()];
        chart
            .draw_series(LineSeries::new(series.iter().map(|&(i, m)| (i, m)), &color))
            .map_err(plot_err)?
            .label(family.name())
            .legend(move |(x, y)| PathElement::new(vec![(x, y), (x + 16, y)], color));
    }
    chart
        .configure_series_labels()
        .border_style(BLACK)
        .background_style(WHITE.mix(0.85))
        .draw()
        .map_err(plot_err)?;
    root.present().map_err(plot_err)?;
    Ok(())
}

/// Scatter of one contaminated dataset with the ideal, conventional and best
/// robust fitted lines.
pub fn linefit_scatter_svg(
    dataset: &LineDataset,
    fits: &[(String, f64, f64)],
    path: &Path,
) -> Result<()> {
    let root = SVGBackend::new(path, (900, 620)).into_drawing_area();
    root.fill(&WHITE).map_err(plot_err)?;
    let y_min = dataset.d_obs.iter().copied().fold(f64::INFINITY, f64::min) - 1.0;
    let y_max = dataset.d_obs.iter().copied().fold(f64::NEG_INFINITY, f64::max) + 1.0;
    let mut chart = ChartBuilder::on(&root)
        .margin(12)
        .caption("contaminated line data and fits", ("sans-serif", 22))
        .x_label_area_size(42)
        .y_label_area_size(56)
        .build_cartesian_2d(-1.1..1.1, y_min..y_max)
        .map_err(plot_err)?;
    chart
        .configure_mesh()
        .x_desc("x")
        .y_desc("d")
        .draw()
        .map_err(plot_err)?;
    chart
        .draw_series(
            dataset
                .x
                .iter()
                .zip(&dataset.d_obs)
                .enumerate()
                .map(|(i, (&x, &d))| {
                    let outlier = dataset.outlier_indices.contains(&i);
                    let color = if outlier { RED.filled() } else { BLACK.filled() };
                    Circle::new((x, d), 3, color)
                }),
        )
        .map_err(plot_err)?;
    let palette = [BLUE, GREEN, MAGENTA, CYAN, RED];
    for (k, (label, m1, m2)) in fits.iter().enumerate() {
        let color = palette[k % palette.len()];
        let (m1, m2) = (*m1, *m2);
        chart
            .draw_series(LineSeries::new(
                [(-1.1, -1.1 * m1 + m2), (1.1, 1.1 * m1 + m2)],
                &color,
            ))
            .map_err(plot_err)?
            .label(label.clone())
            .legend(move |(x, y)| PathElement::new(vec![(x, y), (x + 16, y)], color));
    }
    chart
        .configure_series_labels()
        .border_style(BLACK)
        .background_style(WHITE.mix(0.85))
        .draw()
        .map_err(plot_err)?;
    root.present().map_err(plot_err)?;
    Ok(())
}

/// True, initial and recovered impedance traces.
pub fn trace_overlay_svg(outcome: &PsiOutcome, path: &Path) -> Result<()> {
    let root = SVGBackend::new(path, (900, 620)).into_drawing_area();
    root.fill(&WHITE).map_err(plot_err)?;
    let n = outcome.z_true.len();
    let all = outcome
        .z_true
        .iter()
        .chain(&outcome.z_init)
        .chain(&outcome.z_rec);
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for &v in all {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    let pad = 0.05 * (hi - lo).max(1.0);
    let mut chart = ChartBuilder::on(&root)
        .margin(12)
        .caption("acoustic impedance: true / initial / recovered", ("sans-serif", 22))
        .x_label_area_size(42)
        .y_label_area_size(72)
        .build_cartesian_2d(0.0..(n as f64 * outcome.dt), (lo - pad)..(hi + pad))
        .map_err(plot_err)?;
    chart
        .configure_mesh()
        .x_desc("time (s)")
        .y_desc("impedance")
        .draw()
        .map_err(plot_err)?;
    for (values, color, label) in [
        (&outcome.z_true, BLACK, "true"),
        (&outcome.z_init, BLUE, "initial"),
        (&outcome.z_rec, RED, "recovered"),
    ] {
        chart
            .draw_series(LineSeries::new(
                values.iter().enumerate().map(|(i, &z)| (i as f64 * outcome.dt, z)),
                &color,
            ))
            .map_err(plot_err)?
            .label(label)
            .legend(move |(x, y)| PathElement::new(vec![(x, y), (x + 16, y)], color));
    }
    chart
        .configure_series_labels()
        .border_style(BLACK)
        .background_style(WHITE.mix(0.85))
        .draw()
        .map_err(plot_err)?;
    root.present().map_err(plot_err)?;
    Ok(())
}

/// Render every plot the CSVs in `out_dir` support and write a manifest of
/// the produced files.
pub fn emit_plots(out_dir: &Path, config: &Config) -> Result<Vec<PathBuf>> {
    let mut produced = Vec::new();

    let sweep_path = out_dir.join(csvio::SWEEP_CSV);
    if sweep_path.exists() {
        let sweep = csvio::read_sweep_csv(&sweep_path)?;
        let mut families: Vec<Family> = Vec::new();
        for r in &sweep.rows {
            if !families.contains(&r.family) {
                families.push(r.family);
            }
        }
        for family in families {
            let path = out_dir.join(format!("heatmap_{family}.svg"));
            heatmap_svg(&sweep, family, &path)?;
            produced.push(path);
        }
    }

    let linefit_path = out_dir.join(csvio::LINEFIT_CSV);
    if linefit_path.exists() {
        let result = csvio::read_linefit_csv(&linefit_path)?;
        let path = out_dir.join("linefit_mae.svg");
        linefit_deviation_svg(&result, &path)?;
        produced.push(path);

        // regenerate the first seed's dataset for the scatter plot
        if let Some(&seed_entry) = config.linefit.seeds.first() {
            let dataset = crate::synthdata::generate_line_dataset(
                &config.line,
                super::linefit::line_data_seed(config.seed, seed_entry),
            )?;
            let mut fits = vec![("ideal".to_string(), config.line.m1, config.line.m2)];
            for family in [Family::Renyi, Family::Tsallis, Family::Kaniadakis] {
                if let Some((best_index, _)) = result.best_index(family) {
                    if let Some(row) = result
                        .rows
                        .iter()
                        .find(|r| r.family == family && r.index == best_index && r.seed == seed_entry)
                    {
                        fits.push((format!("{} @ {:.4}", family, best_index), row.m1, row.m2));
                    }
                }
            }
            if let Some(conv) = result
                .rows
                .iter()
                .find(|r| r.index == r.family.conventional_value() && r.seed == seed_entry)
            {
                fits.push(("conventional".to_string(), conv.m1, conv.m2));
            }
            let path = out_dir.join("linefit_fit.svg");
            linefit_scatter_svg(&dataset, &fits, &path)?;
            produced.push(path);
        }
    }

    let model_path = out_dir.join(csvio::PSI_MODEL_CSV);
    if model_path.exists() {
        let text = std::fs::read_to_string(&model_path)?;
        let mut z_true = Vec::new();
        let mut z_init = Vec::new();
        let mut z_rec = Vec::new();
        for line in text.lines().skip(1) {
            let cells: Vec<&str> = line.split(',').collect();
            if cells.len() == 4 {
                z_true.push(cells[1].parse().unwrap_or(f64::NAN));
                z_init.push(cells[2].parse().unwrap_or(f64::NAN));
                z_rec.push(cells[3].parse().unwrap_or(f64::NAN));
            }
        }
        let outcome = PsiOutcome {
            estimate: crate::solver::ModelEstimate {
                model: Vec::new(),
                objective_trace: vec![0.0],
                iterations_used: 0,
                converged: false,
                stop_reason: crate::solver::StopReason::MaxIterations,
            },
            report: Default::default(),
            z_true,
            z_init,
            z_rec,
            d_obs: Vec::new(),
            d_clean: Vec::new(),
            dt: config.seismic.dt,
        };
        let path = out_dir.join("psi_traces.svg");
        trace_overlay_svg(&outcome, &path)?;
        produced.push(path);
    }

    if produced.is_empty() {
        return Err(Error::Plot(format!(
            "no plottable CSVs found in {}",
            out_dir.display()
        )));
    }
    let manifest: String = produced
        .iter()
        .map(|p| format!("{}\n", p.file_name().unwrap_or_default().to_string_lossy()))
        .collect();
    csvio::write_file(out_dir, PLOT_MANIFEST, &manifest)?;
    Ok(produced)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiment::sweep::SweepRow;

    #[test]
    fn heatmap_renders_from_rows() {
        let mut rows = Vec::new();
        for (i, &index) in [0.3334f64, 0.67, 1.0].iter().enumerate() {
            for &c in &[0.0, 0.4, 0.8] {
                rows.push(SweepRow {
                    family: Family::Renyi,
                    index,
                    contamination: c,
                    seed: 1,
                    pearson_r: 1.0 - 0.3 * c - 0.2 * i as f64,
                    mae: 0.0,
                    iterations: 10,
                    stop_reason: "max_iterations".into(),
                });
            }
        }
        let result = SweepResult { rows };
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("heatmap.svg");
        heatmap_svg(&result, Family::Renyi, &path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.contains("<svg"));
        assert!(heatmap_svg(&result, Family::Tsallis, &dir.path().join("x.svg")).is_err());
    }
}
