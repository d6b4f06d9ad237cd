//! Maximum-likelihood misfit objectives.
//!
//! Each objective is the negative log-likelihood of the residuals under the
//! family's error law, up to an additive constant:
//!
//! - Gaussian:     φ(x) = ½ Σ xᵢ²
//! - Rényi:        φ_α(x) = 1/(1−α) Σ ln(1 − ((α−1)/(3α−1)) xᵢ²)
//! - Tsallis:      φ_q(x) = 1/(q−1) Σ ln(1 + ((q−1)/(3−q)) xᵢ²)
//! - Kaniadakis:   φ_κ(x) = −1/κ Σ ln(√(1+κ²β²xᵢ⁴) − κβxᵢ²) = 1/κ Σ asinh(κβxᵢ²)
//!
//! On the objective-valid index ranges (Rényi (1/3,1], Tsallis [1,3),
//! Kaniadakis [0,2/3)) every logarithm argument is ≥ 1 for all real x, so the
//! objectives are finite everywhere. Indices at the conventional limit
//! evaluate the Gaussian branch.

use super::constants::kaniadakis_constants;
use crate::error::{Error, Result};
use crate::index::{EntropicIndex, Family};

/// Evaluate the misfit objective of `idx` on a residual vector.
pub fn objective(residual: &[f64], idx: &EntropicIndex) -> Result<f64> {
    idx.validate_for_objective()?;
    if residual.is_empty() {
        return Err(Error::EmptyInput { what: "residual" });
    }
    if residual.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite { what: "residual" });
    }
    if idx.is_conventional() {
        return Ok(0.5 * residual.iter().map(|x| x * x).sum::<f64>());
    }
    let v = idx.value().expect("non-gaussian index has a value");
    match idx.family() {
        Family::Gaussian => unreachable!("handled by the conventional branch"),
        Family::Renyi => {
            // 1/3 < α < 1: bracket = 1 + ((1−α)/(3α−1)) x² ≥ 1
            let coeff = (1.0 - v) / (3.0 * v - 1.0);
            debug_assert!(coeff > 0.0);
            Ok(residual.iter().map(|x| (coeff * x * x).ln_1p()).sum::<f64>() / (1.0 - v))
        }
        Family::Tsallis => {
            let coeff = (v - 1.0) / (3.0 - v);
            debug_assert!(coeff > 0.0);
            Ok(residual.iter().map(|x| (coeff * x * x).ln_1p()).sum::<f64>() / (v - 1.0))
        }
        Family::Kaniadakis => {
            let beta = kaniadakis_constants(v)?.beta;
            Ok(residual.iter().map(|x| (v * beta * x * x).asinh()).sum::<f64>() / v)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn zero_residual_gives_zero() {
        let zeros = vec![0.0; 5];
        for idx in [
            EntropicIndex::gaussian(),
            EntropicIndex::renyi(0.5).unwrap(),
            EntropicIndex::tsallis(2.0).unwrap(),
            EntropicIndex::kaniadakis(0.4).unwrap(),
        ] {
            assert_eq!(objective(&zeros, &idx).unwrap(), 0.0);
        }
    }

    #[test]
    fn hand_evaluated_values() {
        // q = 2, x = [1]: (1/(q-1))·ln(1 + 1·1) = ln 2
        let q = EntropicIndex::tsallis(2.0).unwrap();
        assert_relative_eq!(objective(&[1.0], &q).unwrap(), 2f64.ln(), max_relative = 1e-12);
        // α = 1/2, x = [1]: (1/(1-α))·ln(1 + ((1-α)/(3α-1))·1) = 2·ln 2
        let a = EntropicIndex::renyi(0.5).unwrap();
        assert_relative_eq!(objective(&[1.0], &a).unwrap(), 2.0 * 2f64.ln(), max_relative = 1e-12);
    }

    #[test]
    fn conventional_guard_routes_to_gaussian() {
        // κ = 1e-12 is within the guard: ½(1 + 4 + 9) = 7
        let k = EntropicIndex::kaniadakis(1e-12).unwrap();
        assert_eq!(objective(&[1.0, 2.0, 3.0], &k).unwrap(), 7.0);
    }

    #[test]
    fn rejects_bad_input() {
        let g = EntropicIndex::gaussian();
        assert!(matches!(objective(&[], &g), Err(Error::EmptyInput { .. })));
        assert!(matches!(
            objective(&[1.0, f64::NAN], &g),
            Err(Error::NonFinite { .. })
        ));
        // density-only indices are out of objective range
        let a2 = EntropicIndex::renyi(2.0).unwrap();
        assert!(matches!(
            objective(&[1.0], &a2),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    proptest! {
        #[test]
        fn objective_is_even_and_nonnegative(xs in proptest::collection::vec(-100.0f64..100.0, 1..20)) {
            for idx in [
                EntropicIndex::renyi(0.4).unwrap(),
                EntropicIndex::tsallis(2.5).unwrap(),
                EntropicIndex::kaniadakis(0.6).unwrap(),
            ] {
                let phi = objective(&xs, &idx).unwrap();
                let neg: Vec<f64> = xs.iter().map(|x| -x).collect();
                let phi_neg = objective(&neg, &idx).unwrap();
                prop_assert!(phi >= 0.0);
                prop_assert!((phi - phi_neg).abs() <= 1e-12 * phi.max(1.0));
            }
        }
    }
}
