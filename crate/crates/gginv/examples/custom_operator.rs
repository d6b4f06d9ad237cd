//! Use the solver as a library on your own linear problem: build an operator,
//! pick an error law, minimize. Here: cubic polynomial regression with 30%
//! outliers, Gaussian versus Tsallis q = 2.9.
//!
//! ```bash
//! cargo run --example custom_operator
//! ```

use gginv::operators::{DenseOperator, LinearOperator};
use gginv::solver::{minimize, InversionProblem, SolverSettings};
use gginv::EntropicIndex;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

fn main() -> gginv::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let n = 80;
    let true_coeffs = [0.5, -1.0, 0.3, 2.0]; // c₃x³ + c₂x² + c₁x + c₀

    // Vandermonde design matrix, one row per sample
    let xs: Vec<f64> = (0..n).map(|i| -2.0 + 4.0 * i as f64 / (n - 1) as f64).collect();
    let mut rows = Vec::with_capacity(n * 4);
    for &x in &xs {
        rows.extend_from_slice(&[x * x * x, x * x, x, 1.0]);
    }
    let operator = DenseOperator::new(n, 4, rows)?;

    let clean = operator.forward(&true_coeffs);
    let mut observed = clean.clone();
    for d in observed.iter_mut() {
        *d += 0.15 * rng.sample::<f64, _>(StandardNormal);
    }
    // corrupt a random 30% of the samples badly
    for i in rand::seq::index::sample(&mut rng, n, n * 3 / 10) {
        observed[i] += 25.0 * rng.sample::<f64, _>(StandardNormal);
    }

    let settings = SolverSettings {
        max_iterations: 100,
        ..SolverSettings::default()
    };
    for (label, index) in [
        ("gaussian".to_string(), EntropicIndex::gaussian()),
        ("tsallis q=2.9".to_string(), EntropicIndex::tsallis(2.9)?),
    ] {
        let problem = InversionProblem::new(&observed, &operator, index, vec![0.0; 4], settings)?;
        let estimate = minimize(&problem)?;
        let err: f64 = estimate
            .model
            .iter()
            .zip(&true_coeffs)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt();
        println!(
            "{label:<14} coefficients {:>24}  ‖error‖ = {err:.4}",
            estimate
                .model
                .iter()
                .map(|c| format!("{c:+.3}"))
                .collect::<Vec<_>>()
                .join(" ")
        );
    }
    println!("true           coefficients {:>24}",
        true_coeffs.iter().map(|c| format!("{c:+.3}")).collect::<Vec<_>>().join(" "));
    Ok(())
}
