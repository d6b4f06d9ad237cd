//! Probability density functions of the four error laws.
//!
//! All densities are zero-mean with unit variance, so they are directly
//! comparable and reduce to the standard Gaussian at the conventional limit.

use super::constants::{kaniadakis_constants, renyi_normalizer, tsallis_normalizer};
use crate::error::Result;
use crate::index::{EntropicIndex, Family};

/// Standard Gaussian density (1/√(2π))·exp(−x²/2).
pub fn gaussian_pdf(x: f64) -> f64 {
    (-0.5 * x * x).exp() / (2.0 * std::f64::consts::PI).sqrt()
}

/// Rényi α-Gaussian density
/// A_α·(1 − ((α−1)/(3α−1))·x²)₊^{1/(α−1)}.
///
/// For α > 1 the support is compact and the density is zero where the bracket
/// is non-positive; for 1/3 < α < 1 the support is all of ℝ with power tails.
pub fn renyi_pdf(x: f64, alpha: &EntropicIndex) -> Result<f64> {
    let a = alpha.expect_family(Family::Renyi)?;
    alpha.validate_for_density()?;
    if alpha.is_conventional() {
        return Ok(gaussian_pdf(x));
    }
    let coeff = (a - 1.0) / (3.0 * a - 1.0);
    let bracket = 1.0 - coeff * x * x;
    if bracket <= 0.0 {
        return Ok(0.0);
    }
    let norm = renyi_normalizer(a)?;
    Ok(norm * bracket.powf(1.0 / (a - 1.0)))
}

/// Tsallis q-Gaussian density
/// A_q·(1 + ((q−1)/(3−q))·x²)₊^{1/(1−q)}.
///
/// Compact support for q < 1, power tails for 1 < q < 3.
pub fn tsallis_pdf(x: f64, q: &EntropicIndex) -> Result<f64> {
    let qv = q.expect_family(Family::Tsallis)?;
    q.validate_for_density()?;
    if q.is_conventional() {
        return Ok(gaussian_pdf(x));
    }
    let coeff = (qv - 1.0) / (3.0 - qv);
    let bracket = 1.0 + coeff * x * x;
    if bracket <= 0.0 {
        return Ok(0.0);
    }
    let norm = tsallis_normalizer(qv)?;
    Ok(norm * bracket.powf(1.0 / (1.0 - qv)))
}

/// Kaniadakis κ-Gaussian density exp_κ(−β_κ x²)/A_κ, where
/// exp_κ(−u) = (√(1 + κ²u²) − κu)^{1/κ}.
///
/// Strictly positive for all finite x: the support is unbounded with heavy
/// power tails. Evaluated as exp(−asinh(κ β x²)/κ), which avoids the
/// catastrophic cancellation in √(1+κ²β²x⁴) − κβx² at large |x|.
pub fn kaniadakis_pdf(x: f64, kappa: &EntropicIndex) -> Result<f64> {
    let k = kappa.expect_family(Family::Kaniadakis)?;
    kappa.validate_for_density()?;
    if kappa.is_conventional() {
        return Ok(gaussian_pdf(x));
    }
    let c = kaniadakis_constants(k)?;
    Ok((-(k * c.beta * x * x).asinh() / k).exp() / c.a)
}

/// Density of whichever family the index selects.
pub fn pdf(x: f64, idx: &EntropicIndex) -> Result<f64> {
    match idx.family() {
        Family::Gaussian => Ok(gaussian_pdf(x)),
        Family::Renyi => renyi_pdf(x, idx),
        Family::Tsallis => tsallis_pdf(x, idx),
        Family::Kaniadakis => kaniadakis_pdf(x, idx),
    }
}
