//! Linear forward operators.
//!
//! Everything the inversion sees is a `LinearOperator`: a dense design matrix
//! for the line experiment, or the composed post-stack operator G = W·D built
//! from a wavelet convolution and a first-difference. Adjoints are exact
//! transposes: ⟨G m, d⟩ = ⟨m, Gᵀ d⟩ to machine precision.

mod wavelet;

pub use wavelet::{ricker, Wavelet};

use crate::error::{Error, Result};

/// A linear map from model space (length `cols`) to data space (length `rows`)
/// together with its adjoint.
pub trait LinearOperator: Send + Sync {
    fn rows(&self) -> usize;
    fn cols(&self) -> usize;

    /// Apply the operator: `model` must have length `cols`.
    fn forward(&self, model: &[f64]) -> Vec<f64>;

    /// Apply the transpose: `data` must have length `rows`.
    fn adjoint(&self, data: &[f64]) -> Vec<f64>;

    /// Materialize the dense matrix, column by column. Intended for tests and
    /// small problems.
    fn to_dense(&self) -> DenseOperator {
        let (rows, cols) = (self.rows(), self.cols());
        let mut data = vec![0.0; rows * cols];
        let mut basis = vec![0.0; cols];
        for j in 0..cols {
            basis[j] = 1.0;
            let col = self.forward(&basis);
            for i in 0..rows {
                data[i * cols + j] = col[i];
            }
            basis[j] = 0.0;
        }
        DenseOperator { rows, cols, data }
    }
}

/// Dense row-major matrix operator.
#[derive(Debug, Clone)]
pub struct DenseOperator {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl DenseOperator {
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: data.len(),
            });
        }
        Ok(DenseOperator { rows, cols, data })
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            data[i * n + i] = 1.0;
        }
        DenseOperator { rows: n, cols: n, data }
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }
}

impl LinearOperator for DenseOperator {
    fn rows(&self) -> usize {
        self.rows
    }

    fn cols(&self) -> usize {
        self.cols
    }

    fn forward(&self, model: &[f64]) -> Vec<f64> {
        assert_eq!(model.len(), self.cols, "model length mismatch");
        self.data
            .chunks_exact(self.cols)
            .map(|row| row.iter().zip(model).map(|(a, m)| a * m).sum())
            .collect()
    }

    fn adjoint(&self, data: &[f64]) -> Vec<f64> {
        assert_eq!(data.len(), self.rows, "data length mismatch");
        let mut out = vec![0.0; self.cols];
        for (row, d) in self.data.chunks_exact(self.cols).zip(data) {
            for (o, a) in out.iter_mut().zip(row) {
                *o += a * d;
            }
        }
        out
    }
}

/// Design matrix of the line experiment d = m₁·x + m₂: N×2 with rows [xᵢ, 1].
pub fn line_design_matrix(x: &[f64]) -> Result<DenseOperator> {
    if x.is_empty() {
        return Err(Error::EmptyInput { what: "abscissae" });
    }
    if x.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite { what: "abscissae" });
    }
    let mut data = Vec::with_capacity(2 * x.len());
    for &xi in x {
        data.push(xi);
        data.push(1.0);
    }
    DenseOperator::new(x.len(), 2, data)
}

/// First-order difference operator: (n−1)×n with rows ½(m_{i+1} − m_i).
///
/// The ½ factor makes D m the reflectivity of a log-impedance model,
/// r ≈ ½ Δ ln Z.
#[derive(Debug, Clone, Copy)]
pub struct DerivativeOperator {
    n: usize,
}

pub fn derivative_operator(n: usize) -> Result<DerivativeOperator> {
    if n < 2 {
        return Err(Error::InvalidParameter {
            name: "n",
            reason: format!("derivative operator needs n >= 2, got {n}"),
        });
    }
    Ok(DerivativeOperator { n })
}

impl LinearOperator for DerivativeOperator {
    fn rows(&self) -> usize {
        self.n - 1
    }

    fn cols(&self) -> usize {
        self.n
    }

    fn forward(&self, model: &[f64]) -> Vec<f64> {
        assert_eq!(model.len(), self.n, "model length mismatch");
        model.windows(2).map(|w| 0.5 * (w[1] - w[0])).collect()
    }

    fn adjoint(&self, data: &[f64]) -> Vec<f64> {
        assert_eq!(data.len(), self.n - 1, "data length mismatch");
        let mut out = vec![0.0; self.n];
        for (i, &d) in data.iter().enumerate() {
            out[i] -= 0.5 * d;
            out[i + 1] += 0.5 * d;
        }
        out
    }
}

/// Banded Toeplitz operator realizing full linear convolution with a wavelet:
/// an n-vector maps to n + n_w − 1 samples. The adjoint is correlation.
#[derive(Debug, Clone)]
pub struct ConvolutionOperator {
    samples: Vec<f64>,
    input_len: usize,
}

pub fn convolution_operator(wavelet: &Wavelet, n: usize) -> Result<ConvolutionOperator> {
    if n == 0 {
        return Err(Error::EmptyInput { what: "convolution input" });
    }
    Ok(ConvolutionOperator {
        samples: wavelet.samples().to_vec(),
        input_len: n,
    })
}

impl LinearOperator for ConvolutionOperator {
    fn rows(&self) -> usize {
        self.input_len + self.samples.len() - 1
    }

    fn cols(&self) -> usize {
        self.input_len
    }

    fn forward(&self, model: &[f64]) -> Vec<f64> {
        assert_eq!(model.len(), self.input_len, "model length mismatch");
        let mut out = vec![0.0; self.rows()];
        for (j, &m) in model.iter().enumerate() {
            if m == 0.0 {
                continue;
            }
            for (k, &w) in self.samples.iter().enumerate() {
                out[j + k] += w * m;
            }
        }
        out
    }

    fn adjoint(&self, data: &[f64]) -> Vec<f64> {
        assert_eq!(data.len(), self.rows(), "data length mismatch");
        let mut out = vec![0.0; self.input_len];
        for (j, o) in out.iter_mut().enumerate() {
            *o = self
                .samples
                .iter()
                .enumerate()
                .map(|(k, &w)| w * data[j + k])
                .sum();
        }
        out
    }
}

/// Composition outer ∘ inner: forward = outer(inner(m)), adjoint in reverse.
#[derive(Debug, Clone)]
pub struct ComposedOperator<O, I> {
    outer: O,
    inner: I,
}

impl<O: LinearOperator, I: LinearOperator> ComposedOperator<O, I> {
    pub fn new(outer: O, inner: I) -> Result<Self> {
        if outer.cols() != inner.rows() {
            return Err(Error::DimensionMismatch {
                expected: outer.cols(),
                got: inner.rows(),
            });
        }
        Ok(ComposedOperator { outer, inner })
    }
}

impl<O: LinearOperator, I: LinearOperator> LinearOperator for ComposedOperator<O, I> {
    fn rows(&self) -> usize {
        self.outer.rows()
    }

    fn cols(&self) -> usize {
        self.inner.cols()
    }

    fn forward(&self, model: &[f64]) -> Vec<f64> {
        self.outer.forward(&self.inner.forward(model))
    }

    fn adjoint(&self, data: &[f64]) -> Vec<f64> {
        self.inner.adjoint(&self.outer.adjoint(data))
    }
}

/// The post-stack operator G = W·D.
pub type PsiOperator = ComposedOperator<ConvolutionOperator, DerivativeOperator>;

/// Build G = W·D for an n_model-sample log-impedance trace: the seismogram is
/// the wavelet convolved with the reflectivity ½Δln Z, with full-convolution
/// output length (n_model − 1) + n_w − 1.
pub fn psi_operator(wavelet: &Wavelet, n_model: usize) -> Result<PsiOperator> {
    let deriv = derivative_operator(n_model)?;
    let conv = convolution_operator(wavelet, n_model - 1)?;
    ComposedOperator::new(conv, deriv)
}
