//! Comparison metrics: mean absolute error, Pearson correlation, empirical SNR.

use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// A bundle of comparison metrics for one estimate.
#[derive(Debug, Clone, Default)]
pub struct MetricReport {
    pub mae: f64,
    pub pearson_r: f64,
    /// Additional named scalars (e.g. empirical SNR), deterministic order.
    pub extras: BTreeMap<String, f64>,
}

/// Mean absolute elementwise difference Σ|aᵢ − bᵢ|/N.
pub fn mae(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            got: b.len(),
        });
    }
    if a.is_empty() {
        return Err(Error::EmptyInput { what: "mae input" });
    }
    Ok(a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum::<f64>() / a.len() as f64)
}

/// Pearson correlation coefficient between two sequences:
/// R = ΣΔᵃΔᵇ / (√Σ(Δᵃ)² √Σ(Δᵇ)²) with Δ the deviation from the mean.
///
/// Constant input makes R undefined; that case is reported as an error rather
/// than silently returned as 0 or NaN.
pub fn pearson_r(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            got: b.len(),
        });
    }
    if a.len() < 2 {
        return Err(Error::EmptyInput { what: "pearson input" });
    }
    let n = a.len() as f64;
    let mean_a = a.iter().sum::<f64>() / n;
    let mean_b = b.iter().sum::<f64>() / n;
    let (mut sab, mut saa, mut sbb) = (0.0, 0.0, 0.0);
    for (x, y) in a.iter().zip(b) {
        let da = x - mean_a;
        let db = y - mean_b;
        sab += da * db;
        saa += da * da;
        sbb += db * db;
    }
    if saa == 0.0 || sbb == 0.0 {
        return Err(Error::ConstantInput);
    }
    Ok((sab / (saa.sqrt() * sbb.sqrt())).clamp(-1.0, 1.0))
}

/// Empirical signal-to-noise ratio in dB: 10·log₁₀(Σ clean² / Σ (noisy − clean)²).
pub fn empirical_snr_db(clean: &[f64], noisy: &[f64]) -> Result<f64> {
    if clean.len() != noisy.len() {
        return Err(Error::DimensionMismatch {
            expected: clean.len(),
            got: noisy.len(),
        });
    }
    let p_signal: f64 = clean.iter().map(|x| x * x).sum();
    let p_noise: f64 = clean.iter().zip(noisy).map(|(c, n)| (n - c).powi(2)).sum();
    if p_noise == 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(10.0 * (p_signal / p_noise).log10())
}
