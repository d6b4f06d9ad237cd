//! Nonlinear conjugate-gradient minimization.
//!
//! Works on any (objective, gradient) pair over model space. The variant is
//! Polak–Ribière with a non-negativity reset (β ← max(β, 0)) and a periodic
//! restart, paired with a backtracking line search under the Armijo
//! sufficient-decrease condition. Each trial step is refined by minimizing
//! the quadratic interpolant through φ(0), φ'(0) and φ(a), so on exactly
//! quadratic objectives the accepted steps are exact and the method reduces
//! to linear CG with finite termination.

use crate::error::{Error, Result};
use crate::index::EntropicIndex;
use crate::operators::LinearOperator;
use crate::stats::{objective, objective_gradient};
use serde::{Deserialize, Serialize};

/// Armijo backtracking line-search parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct LineSearchParams {
    /// Norm of the first trial displacement on the first iteration; later
    /// iterations start from the previously accepted step.
    pub initial_step: f64,
    /// Multiplicative backtracking factor, in (0, 1).
    pub shrink: f64,
    /// Armijo sufficient-decrease constant c₁, in (0, 1).
    pub sufficient_decrease: f64,
    /// Shrink attempts before the search is declared failed.
    pub max_backtracks: usize,
}

impl Default for LineSearchParams {
    fn default() -> Self {
        LineSearchParams {
            initial_step: 1.0,
            shrink: 0.5,
            sufficient_decrease: 1e-4,
            max_backtracks: 60,
        }
    }
}

/// Iteration protocol of the solver.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SolverSettings {
    pub max_iterations: usize,
    /// Relative gradient-norm tolerance: stop once ‖g‖ ≤ tol·(1 + |φ|).
    pub tolerance: f64,
    pub line_search: LineSearchParams,
    /// Steepest-descent restart period; `None` restarts every `cols` iterations.
    pub restart_period: Option<usize>,
}

impl Default for SolverSettings {
    fn default() -> Self {
        SolverSettings {
            max_iterations: 10,
            tolerance: 1e-12,
            line_search: LineSearchParams::default(),
            restart_period: None,
        }
    }
}

impl SolverSettings {
    pub fn validate(&self) -> Result<()> {
        if self.max_iterations == 0 {
            return Err(Error::InvalidParameter {
                name: "max_iterations",
                reason: "must be at least 1".into(),
            });
        }
        if !(self.tolerance.is_finite() && self.tolerance > 0.0) {
            return Err(Error::InvalidParameter {
                name: "tolerance",
                reason: format!("must be positive, got {}", self.tolerance),
            });
        }
        let shrink = self.line_search.shrink;
        if !(shrink.is_finite() && 0.0 < shrink && shrink < 1.0) {
            return Err(Error::InvalidParameter {
                name: "shrink",
                reason: format!("must lie in (0, 1), got {}", self.line_search.shrink),
            });
        }
        let c1 = self.line_search.sufficient_decrease;
        if !(c1.is_finite() && 0.0 < c1 && c1 < 1.0) {
            return Err(Error::InvalidParameter {
                name: "sufficient_decrease",
                reason: format!(
                    "must lie in (0, 1), got {}",
                    self.line_search.sufficient_decrease
                ),
            });
        }
        if !(self.line_search.initial_step.is_finite() && self.line_search.initial_step > 0.0) {
            return Err(Error::InvalidParameter {
                name: "initial_step",
                reason: format!("must be positive, got {}", self.line_search.initial_step),
            });
        }
        Ok(())
    }
}

/// Why the solver stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StopReason {
    Tolerance,
    MaxIterations,
    LineSearchFailure,
}

impl std::fmt::Display for StopReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            StopReason::Tolerance => "tolerance",
            StopReason::MaxIterations => "max_iterations",
            StopReason::LineSearchFailure => "line_search_failure",
        })
    }
}

/// Result of a minimization.
#[derive(Debug, Clone)]
pub struct ModelEstimate {
    pub model: Vec<f64>,
    /// Objective at the start plus after every accepted step; non-increasing.
    pub objective_trace: Vec<f64>,
    pub iterations_used: usize,
    pub converged: bool,
    pub stop_reason: StopReason,
}

/// An inversion task: observed data, forward operator, error-law index,
/// starting model and solver protocol.
pub struct InversionProblem<'a> {
    pub observed: &'a [f64],
    pub operator: &'a dyn LinearOperator,
    pub index: EntropicIndex,
    pub initial_model: Vec<f64>,
    pub settings: SolverSettings,
}

impl<'a> InversionProblem<'a> {
    pub fn new(
        observed: &'a [f64],
        operator: &'a dyn LinearOperator,
        index: EntropicIndex,
        initial_model: Vec<f64>,
        settings: SolverSettings,
    ) -> Result<Self> {
        if observed.len() != operator.rows() {
            return Err(Error::DimensionMismatch {
                expected: operator.rows(),
                got: observed.len(),
            });
        }
        if initial_model.len() != operator.cols() {
            return Err(Error::DimensionMismatch {
                expected: operator.cols(),
                got: initial_model.len(),
            });
        }
        index.validate_for_objective()?;
        settings.validate()?;
        Ok(InversionProblem {
            observed,
            operator,
            index,
            initial_model,
            settings,
        })
    }
}

/// Residual x = d_obs − G m.
pub fn residual(model: &[f64], problem: &InversionProblem<'_>) -> Result<Vec<f64>> {
    if model.len() != problem.operator.cols() {
        return Err(Error::DimensionMismatch {
            expected: problem.operator.cols(),
            got: model.len(),
        });
    }
    let predicted = problem.operator.forward(model);
    Ok(problem
        .observed
        .iter()
        .zip(&predicted)
        .map(|(d, p)| d - p)
        .collect())
}

/// Minimize the problem's misfit objective with NCG.
pub fn minimize(problem: &InversionProblem<'_>) -> Result<ModelEstimate> {
    let f = |m: &[f64]| -> Result<f64> {
        let r = residual(m, problem)?;
        objective(&r, &problem.index)
    };
    let g = |m: &[f64]| -> Result<Vec<f64>> {
        let r = residual(m, problem)?;
        objective_gradient(&r, problem.operator, &problem.index)
    };
    minimize_objective(f, g, &problem.initial_model, &problem.settings)
}

fn norm2(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// NCG core over an arbitrary (objective, gradient) pair.
pub fn minimize_objective<F, G>(
    f: F,
    grad: G,
    x0: &[f64],
    settings: &SolverSettings,
) -> Result<ModelEstimate>
where
    F: Fn(&[f64]) -> Result<f64>,
    G: Fn(&[f64]) -> Result<Vec<f64>>,
{
    settings.validate()?;
    let n = x0.len();
    let restart = settings.restart_period.unwrap_or(n.max(1));
    let ls = &settings.line_search;

    let mut x = x0.to_vec();
    let mut phi = f(&x)?;
    let mut g = grad(&x)?;
    check_finite(phi, &g, 0, &x)?;

    let mut trace = vec![phi];
    let mut direction: Vec<f64> = g.iter().map(|v| -v).collect();
    let mut since_restart = 0usize;
    let mut prev_step: Option<f64> = None;

    let converged = |phi: f64, g: &[f64]| norm2(g) <= settings.tolerance * (1.0 + phi.abs());

    if converged(phi, &g) {
        return Ok(ModelEstimate {
            model: x,
            objective_trace: trace,
            iterations_used: 0,
            converged: true,
            stop_reason: StopReason::Tolerance,
        });
    }

    let mut iterations_used = 0;
    let mut stop_reason = StopReason::MaxIterations;
    let mut is_converged = false;

    for iter in 0..settings.max_iterations {
        let slope = dot(&g, &direction);
        // enforce a descent direction
        if slope >= 0.0 {
            direction = g.iter().map(|v| -v).collect();
            since_restart = 0;
        }
        let slope = dot(&g, &direction);
        if slope >= 0.0 {
            // gradient is numerically zero
            stop_reason = StopReason::Tolerance;
            is_converged = true;
            break;
        }

        let dir_norm = norm2(&direction);
        let first_trial = match prev_step {
            Some(s) => 2.0 * s,
            None => ls.initial_step / dir_norm,
        };

        match line_search(&f, &x, phi, &direction, slope, first_trial, ls, iter)? {
            Some((step, x_new, phi_new)) => {
                x = x_new;
                phi = phi_new;
                prev_step = Some(step);
            }
            None => {
                stop_reason = StopReason::LineSearchFailure;
                iterations_used = iter;
                break;
            }
        }

        let g_new = grad(&x)?;
        check_finite(phi, &g_new, iter + 1, &x)?;
        trace.push(phi);
        iterations_used = iter + 1;
        since_restart += 1;

        if converged(phi, &g_new) {
            stop_reason = StopReason::Tolerance;
            is_converged = true;
            break;
        }

        // Polak–Ribière with non-negativity reset, periodic steepest restart
        let beta = if since_restart >= restart {
            since_restart = 0;
            0.0
        } else {
            let gg = dot(&g, &g);
            if gg == 0.0 {
                0.0
            } else {
                let diff: Vec<f64> = g_new.iter().zip(&g).map(|(a, b)| a - b).collect();
                (dot(&g_new, &diff) / gg).max(0.0)
            }
        };
        direction = g_new
            .iter()
            .zip(&direction)
            .map(|(gn, d)| -gn + beta * d)
            .collect();
        g = g_new;
    }

    Ok(ModelEstimate {
        model: x,
        objective_trace: trace,
        iterations_used,
        converged: is_converged,
        stop_reason,
    })
}

fn check_finite(phi: f64, g: &[f64], iteration: usize, model: &[f64]) -> Result<()> {
    if !phi.is_finite() {
        return Err(Error::NonFiniteIterate {
            what: "objective",
            iteration,
            model: model.to_vec(),
        });
    }
    if g.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFiniteIterate {
            what: "gradient",
            iteration,
            model: model.to_vec(),
        });
    }
    Ok(())
}

/// Armijo backtracking with one quadratic-interpolation refinement per trial.
/// Returns the accepted (step, point, objective), or `None` when the search
/// exhausts its backtracking budget.
#[allow(clippy::too_many_arguments)]
fn line_search<F>(
    f: &F,
    x: &[f64],
    phi0: f64,
    direction: &[f64],
    slope: f64,
    first_trial: f64,
    ls: &LineSearchParams,
    iteration: usize,
) -> Result<Option<(f64, Vec<f64>, f64)>>
where
    F: Fn(&[f64]) -> Result<f64>,
{
    let probe = |step: f64| -> Result<(Vec<f64>, f64)> {
        let xt: Vec<f64> = x.iter().zip(direction).map(|(xi, di)| xi + step * di).collect();
        let phit = f(&xt)?;
        if !phit.is_finite() {
            // treat as an unacceptable trial, not a hard failure
            return Ok((xt, f64::INFINITY));
        }
        Ok((xt, phit))
    };
    let armijo = |step: f64, phit: f64| phit <= phi0 + ls.sufficient_decrease * step * slope;

    let mut step = first_trial;
    for _ in 0..=ls.max_backtracks {
        let (xt, phit) = probe(step)?;

        // quadratic interpolant through phi(0), slope, phi(step)
        let denom = phit - phi0 - slope * step;
        if denom > 0.0 && phit.is_finite() {
            let interp = -slope * step * step / (2.0 * denom);
            if interp.is_finite() && interp > 0.0 {
                let clamped = interp.clamp(0.1 * step, 10.0 * step);
                if (clamped - step).abs() > 1e-12 * step {
                    let (xi, phii) = probe(clamped)?;
                    // keep whichever acceptable trial is lower
                    if armijo(clamped, phii) && (phii <= phit || !armijo(step, phit)) {
                        return Ok(Some((clamped, xi, phii)));
                    }
                }
            }
        }
        if armijo(step, phit) {
            return Ok(Some((step, xt, phit)));
        }
        step *= ls.shrink;
    }
    let _ = iteration;
    Ok(None)
}
