//! Show how the influence of a residual on the estimate changes with the
//! entropic index: linear for the Gaussian, decaying like 1/x at the robust
//! limits — the mechanism behind outlier resistance.
//!
//! ```bash
//! cargo run --example influence_decay
//! ```

use gginv::stats::influence_kernel;
use gginv::EntropicIndex;

fn main() -> gginv::Result<()> {
    let rows = vec![
        ("gaussian", EntropicIndex::gaussian()),
        ("renyi a=0.70", EntropicIndex::renyi(0.70)?),
        ("renyi a=0.3334", EntropicIndex::renyi(0.3334)?),
        ("tsallis q=2.0", EntropicIndex::tsallis(2.0)?),
        ("tsallis q=2.9999", EntropicIndex::tsallis(2.9999)?),
        ("kaniadakis k=0.30", EntropicIndex::kaniadakis(0.30)?),
        ("kaniadakis k=0.6666", EntropicIndex::kaniadakis(0.6666)?),
    ];
    let xs = [0.1, 1.0, 10.0, 100.0, 1e3, 1e4];

    println!("influence kernel dφ/dx by residual magnitude:");
    print!("{:<22}", "index");
    for x in xs {
        print!("{x:>12.0e}");
    }
    println!();
    for (label, idx) in &rows {
        print!("{label:<22}");
        for x in xs {
            print!("{:>12.3e}", influence_kernel(x, idx)?);
        }
        println!();
    }

    println!("\nkernel·x at the robust limits (constant ⇒ 1/x decay):");
    for (label, idx) in rows.iter().filter(|(l, _)| l.contains("0.3334") || l.contains("2.9999") || l.contains("0.6666")) {
        let products: Vec<String> = [1e2, 1e3, 1e4]
            .iter()
            .map(|&x| format!("{:.5}", influence_kernel(x, idx).unwrap() * x))
            .collect();
        println!("  {label:<22} {}", products.join("  "));
    }
    Ok(())
}
