//! Misfit gradient in model space.

use super::influence::influence_kernel;
use crate::error::{Error, Result};
use crate::index::EntropicIndex;
use crate::operators::LinearOperator;

/// Gradient of the misfit objective with respect to the model, given the
/// residual x = d_obs − G m: ∇φ(m) = −Gᵀ·k(x), where k is the per-sample
/// influence kernel. For the Gaussian family this is exactly −Gᵀx.
pub fn objective_gradient(
    residual: &[f64],
    operator: &dyn LinearOperator,
    idx: &EntropicIndex,
) -> Result<Vec<f64>> {
    if residual.len() != operator.rows() {
        return Err(Error::DimensionMismatch {
            expected: operator.rows(),
            got: residual.len(),
        });
    }
    let kernel = residual
        .iter()
        .map(|&x| influence_kernel(x, idx))
        .collect::<Result<Vec<f64>>>()?;
    Ok(operator.adjoint(&kernel).iter().map(|g| -g).collect())
}
