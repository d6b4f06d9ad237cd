//! Desk-scale contamination × index sweep: 20 indices per family, nine
//! contamination levels, three seeds — 1620 inversions — rendered as one
//! Pearson-R heatmap per family with the R = 0.9 level marked.
//!
//! ```bash
//! cargo run --release --example heatmap_sweep
//! ```

use gginv::experiment::{heatmap_svg, run_heatmap_sweep, sweep_csv, write_file, Config};
use std::path::Path;

fn main() -> gginv::Result<()> {
    let config = Config::default();
    let started = std::time::Instant::now();
    let result = run_heatmap_sweep(&config)?;
    println!(
        "{} inversions in {:.1?}",
        result.rows.len(),
        started.elapsed()
    );

    for family in &config.sweep.families {
        let limit = family.limit_value();
        let conventional = family.conventional_value();
        println!("{family}:");
        println!("  contamination   R(limit idx)   R(conventional)");
        for &c in &config.sweep.contaminations {
            println!(
                "  {c:>13.1}   {:>12.4}   {:>15.4}",
                result.median_r(*family, limit, c).unwrap_or(f64::NAN),
                result.median_r(*family, conventional, c).unwrap_or(f64::NAN),
            );
        }
    }

    let out = Path::new("out");
    write_file(out, "sweep.csv", &sweep_csv(&result))?;
    for family in &config.sweep.families {
        heatmap_svg(&result, *family, &out.join(format!("heatmap_{family}.svg")))?;
    }
    println!("wrote out/sweep.csv and out/heatmap_*.svg");
    Ok(())
}
