//! Per-sample influence kernels dφ/dx.
//!
//! The kernel measures how strongly a single residual steers the estimate:
//!
//! - Gaussian:    x                       (unbounded — outliers dominate)
//! - Rényi:       2x / (3α−1 − (α−1)x²)   (→ 0 as |x| → ∞ for α < 1)
//! - Tsallis:     2x / (3−q + (q−1)x²)    (→ 0 as |x| → ∞ for q > 1)
//! - Kaniadakis:  2βx / √(1+κ²β²x⁴)       (→ 0 as |x| → ∞)
//!
//! At the robust ends of the index ranges the kernels decay like 1/x, so the
//! product kernel·x tends to a positive constant. Summing the kernel over the
//! residuals of a linear model and applying the adjoint operator reproduces
//! the misfit gradient.

use super::constants::kaniadakis_constants;
use crate::error::Result;
use crate::index::{EntropicIndex, Family};

/// Derivative of the misfit objective with respect to one residual sample.
pub fn influence_kernel(x: f64, idx: &EntropicIndex) -> Result<f64> {
    idx.validate_for_objective()?;
    if idx.is_conventional() {
        return Ok(x);
    }
    let v = idx.value().expect("non-gaussian index has a value");
    match idx.family() {
        Family::Gaussian => unreachable!("handled by the conventional branch"),
        Family::Renyi => Ok(2.0 * x / (3.0 * v - 1.0 - (v - 1.0) * x * x)),
        Family::Tsallis => Ok(2.0 * x / (3.0 - v + (v - 1.0) * x * x)),
        Family::Kaniadakis => {
            let beta = kaniadakis_constants(v)?.beta;
            let u = v * beta * x * x;
            Ok(2.0 * beta * x / u.hypot(1.0))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn zero_at_origin() {
        for idx in [
            EntropicIndex::gaussian(),
            EntropicIndex::renyi(0.5).unwrap(),
            EntropicIndex::tsallis(2.0).unwrap(),
            EntropicIndex::kaniadakis(0.4).unwrap(),
        ] {
            assert_eq!(influence_kernel(0.0, &idx).unwrap(), 0.0);
        }
    }

    #[test]
    fn gaussian_kernel_is_linear() {
        let g = EntropicIndex::gaussian();
        assert_eq!(influence_kernel(1e3, &g).unwrap(), 1e3);
        assert_eq!(influence_kernel(-1e3, &g).unwrap(), -1e3);
    }

    #[test]
    fn tsallis_kernel_decays_at_large_residuals() {
        let q = EntropicIndex::tsallis(2.9999).unwrap();
        let i = influence_kernel(1e3, &q).unwrap();
        let expected = 2.0 / (0.0001 / 1e3 + 1.9999 * 1e3);
        assert_relative_eq!(i, expected, max_relative = 1e-12);
        assert!((i - 1.0e-3).abs() < 1e-6, "kernel ≈ 1.0e-3, got {i}");
    }

    #[test]
    fn kernel_matches_objective_derivative() {
        // central finite difference of the scalar objective
        for idx in [
            EntropicIndex::renyi(0.6).unwrap(),
            EntropicIndex::tsallis(1.7).unwrap(),
            EntropicIndex::kaniadakis(0.55).unwrap(),
        ] {
            for &x in &[0.3f64, 1.0, -2.5, 17.0] {
                let h = 1e-6 * x.abs().max(1.0);
                let fp = crate::stats::objective(&[x + h], &idx).unwrap();
                let fm = crate::stats::objective(&[x - h], &idx).unwrap();
                let fd = (fp - fm) / (2.0 * h);
                let k = influence_kernel(x, &idx).unwrap();
                assert_relative_eq!(k, fd, max_relative = 1e-6);
            }
        }
    }

    #[test]
    fn robustness_is_monotone_in_the_index() {
        // at |x| = 100 the kernel magnitude must not increase as each family
        // moves from the conventional end toward its robust limit
        let x = 100.0;
        let steps = 40;
        let grids: [Vec<EntropicIndex>; 3] = [
            (0..=steps)
                .map(|i| {
                    let a = 1.0 - (1.0 - 0.34) * i as f64 / steps as f64;
                    EntropicIndex::renyi(a).unwrap()
                })
                .collect(),
            (0..=steps)
                .map(|i| {
                    let q = 1.0 + (2.9999 - 1.0) * i as f64 / steps as f64;
                    EntropicIndex::tsallis(q).unwrap()
                })
                .collect(),
            (0..=steps)
                .map(|i| {
                    let k = 0.65 * i as f64 / steps as f64;
                    EntropicIndex::kaniadakis(k).unwrap()
                })
                .collect(),
        ];
        for grid in &grids {
            let mut prev = f64::INFINITY;
            for idx in grid {
                let mag = influence_kernel(x, idx).unwrap().abs();
                assert!(
                    mag <= prev * (1.0 + 1e-12),
                    "kernel magnitude increased at {idx}: {mag} > {prev}"
                );
                prev = mag;
            }
        }
    }

    #[test]
    fn kernel_decays_inversely_at_the_range_ends() {
        // just inside the extreme ends of each family's range, the kernel
        // behaves like c/x: consecutive decade evaluations shrink by 10
        for idx in [
            EntropicIndex::renyi(1.0 / 3.0 + 1e-4).unwrap(),
            EntropicIndex::tsallis(3.0 - 1e-4).unwrap(),
            EntropicIndex::kaniadakis(2.0 / 3.0 - 1e-4).unwrap(),
        ] {
            let k: Vec<f64> = [1e2, 1e3, 1e4]
                .iter()
                .map(|&x| influence_kernel(x, &idx).unwrap())
                .collect();
            assert!(k[0] > 0.0);
            for w in k.windows(2) {
                let ratio = w[1] / w[0];
                assert!(
                    (ratio - 0.1).abs() <= 0.02 * 0.1,
                    "{idx}: consecutive kernel ratio {ratio} not within 2% of 0.1"
                );
            }
        }
    }

    proptest! {
        #[test]
        fn kernel_is_odd(x in -1e4f64..1e4) {
            for idx in [
                EntropicIndex::renyi(0.45).unwrap(),
                EntropicIndex::tsallis(2.4).unwrap(),
                EntropicIndex::kaniadakis(0.3).unwrap(),
            ] {
                let k = influence_kernel(x, &idx).unwrap();
                let km = influence_kernel(-x, &idx).unwrap();
                prop_assert!((k + km).abs() <= 1e-14 * k.abs().max(1e-300));
            }
        }
    }
}
