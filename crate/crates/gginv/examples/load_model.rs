//! Run the post-stack inversion on an impedance model loaded from disk
//! instead of the built-in layered benchmark. Writes a small demo model
//! first, then points the harness at it.
//!
//! Accepted formats: plain text with an `n dt` header and one impedance per
//! line, or CSV with `index,z` columns.
//!
//! ```bash
//! cargo run --example load_model
//! ```

use gginv::experiment::{run_psi, Config};
use gginv::synthdata::load_impedance_model;
use std::fmt::Write as _;

fn main() -> gginv::Result<()> {
    std::fs::create_dir_all("out")?;
    let path = "out/demo_model.txt";
    let n = 300;
    let mut text = format!("{n} 0.001\n");
    for i in 0..n {
        // a ramp with two embedded beds
        let z = 4.0e6
            + 8.0e3 * i as f64
            + if (90..120).contains(&i) { 1.6e6 } else { 0.0 }
            + if (200..230).contains(&i) { -0.9e6 } else { 0.0 };
        writeln!(text, "{z}").unwrap();
    }
    std::fs::write(path, text)?;

    let model = load_impedance_model(std::path::Path::new(path))?;
    println!("loaded {} samples at dt = {} s from {path}", model.len(), model.dt);

    let mut config = Config::default();
    config.seismic.model_file = Some(path.to_string());
    config.noise.spike_fraction = 0.2;
    config.psi.family = gginv::Family::Renyi;
    config.psi.index = 0.3334;
    let outcome = run_psi(&config)?;
    println!(
        "renyi alpha=0.3334 on the loaded model: R = {:.4}, MAE = {:.3e}",
        outcome.report.pearson_r, outcome.report.mae
    );
    Ok(())
}
