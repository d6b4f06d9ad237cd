//! Seismic source wavelets.

use crate::error::{Error, Result};

/// A sampled source wavelet on a uniform time grid.
#[derive(Debug, Clone)]
pub struct Wavelet {
    samples: Vec<f64>,
    dt: f64,
    peak_frequency: f64,
}

impl Wavelet {
    pub fn from_samples(samples: Vec<f64>, dt: f64, peak_frequency: f64) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::EmptyInput { what: "wavelet samples" });
        }
        if samples.iter().any(|s| !s.is_finite()) {
            return Err(Error::NonFinite { what: "wavelet samples" });
        }
        if dt <= 0.0 {
            return Err(Error::InvalidParameter {
                name: "dt",
                reason: format!("sampling interval must be positive, got {dt}"),
            });
        }
        Ok(Wavelet { samples, dt, peak_frequency })
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn peak_frequency(&self) -> f64 {
        self.peak_frequency
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }
}

/// Ricker wavelet w(t) = (1 − 2π²ν²t²)·exp(−π²ν²t²) sampled on the dt grid
/// over t ∈ [−half_width, half_width].
///
/// With `half_width = None` the support starts at 3/(π·ν·√2) and is extended
/// on the grid until the end samples fall below 1e-4 of the unit peak, so the
/// banded convolution operator carries no audible truncation.
pub fn ricker(peak_frequency: f64, dt: f64, half_width: Option<f64>) -> Result<Wavelet> {
    if peak_frequency <= 0.0 || !peak_frequency.is_finite() {
        return Err(Error::InvalidParameter {
            name: "peak_frequency",
            reason: format!("must be positive, got {peak_frequency}"),
        });
    }
    if dt <= 0.0 || !dt.is_finite() {
        return Err(Error::InvalidParameter {
            name: "dt",
            reason: format!("must be positive, got {dt}"),
        });
    }
    let value = |t: f64| {
        let u = (std::f64::consts::PI * peak_frequency * t).powi(2);
        (1.0 - 2.0 * u) * (-u).exp()
    };
    let half_samples = match half_width {
        Some(h) => {
            if h < 0.0 || !h.is_finite() {
                return Err(Error::InvalidParameter {
                    name: "half_width",
                    reason: format!("must be non-negative, got {h}"),
                });
            }
            (h / dt).round() as usize
        }
        None => {
            let base = 3.0 / (std::f64::consts::PI * peak_frequency * 2f64.sqrt());
            let mut k = (base / dt).ceil() as usize;
            while value(k as f64 * dt).abs() > 1e-4 {
                k += 1;
            }
            k
        }
    };
    let n = 2 * half_samples + 1;
    let samples = (0..n)
        .map(|i| value((i as f64 - half_samples as f64) * dt))
        .collect();
    Wavelet::from_samples(samples, dt, peak_frequency)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn center_sample_is_one() {
        let w = ricker(55.0, 0.001, None).unwrap();
        let mid = w.len() / 2;
        assert_eq!(w.samples()[mid], 1.0);
        assert_eq!(w.len() % 2, 1);
        // peak sample magnitude is the max
        assert!(w.samples().iter().all(|s| s.abs() <= 1.0));
    }

    #[test]
    fn wavelet_is_even() {
        let w = ricker(55.0, 0.001, None).unwrap();
        let n = w.len();
        for i in 0..n / 2 {
            assert_relative_eq!(w.samples()[i], w.samples()[n - 1 - i], epsilon = 1e-15);
        }
    }

    #[test]
    fn zero_crossings() {
        // roots of 1 − 2π²ν²t² sit at t = ±1/(π·ν·√2)
        let nu = 55.0;
        let t0 = 1.0 / (std::f64::consts::PI * nu * 2f64.sqrt());
        let w = ricker(nu, 1e-7, Some(2.0 * t0)).unwrap();
        let mid = w.len() / 2;
        let k = (t0 / 1e-7).round() as usize;
        // sign change across the analytic root
        assert!(w.samples()[mid + k - 2] * w.samples()[mid + k + 2] < 0.0);
    }

    #[test]
    fn default_width_decays_below_1e4_of_peak() {
        let w = ricker(55.0, 0.001, None).unwrap();
        assert!(w.samples()[0].abs() <= 1e-4);
        assert!(w.samples()[w.len() - 1].abs() <= 1e-4);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(ricker(0.0, 0.001, None).is_err());
        assert!(ricker(-5.0, 0.001, None).is_err());
        assert!(ricker(55.0, 0.0, None).is_err());
    }
}
