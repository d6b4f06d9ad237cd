use crate::index::Family;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An entropic index lies outside the range required by the requested use.
    #[error("{family} index {value} out of range for {usage}: expected {expected}")]
    IndexOutOfRange {
        family: Family,
        value: f64,
        usage: &'static str,
        expected: &'static str,
    },

    /// The operation dispatches on a different statistic family than the one given.
    #[error("expected a {expected} index, got {got}")]
    FamilyMismatch { expected: Family, got: Family },

    /// Gamma-function pole in the kappa constants (1/(2|kappa|) - 3/4 <= 0).
    #[error("kappa constants undefined at kappa = {kappa}: gamma pole at kappa >= 2/3")]
    KappaPole { kappa: f64 },

    #[error("non-finite value in {what}")]
    NonFinite { what: &'static str },

    /// Objective or gradient became non-finite at an iterate; the offending
    /// model is reported so the caller can inspect it.
    #[error("non-finite {what} at iteration {iteration}")]
    NonFiniteIterate {
        what: &'static str,
        iteration: usize,
        model: Vec<f64>,
    },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("empty input: {what}")]
    EmptyInput { what: &'static str },

    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// Pearson correlation of a constant sequence is undefined; reported
    /// explicitly instead of returning NaN.
    #[error("constant input: correlation undefined")]
    ConstantInput,

    #[error("config error: {0}")]
    Config(String),

    #[error("failed to parse {path}: {reason}")]
    Parse { path: String, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("plot rendering failed: {0}")]
    Plot(String),
}

impl Error {
    /// True for errors caused by bad configuration or input files, as opposed
    /// to runtime failures. The CLI maps these to exit code 2.
    pub fn is_config(&self) -> bool {
        matches!(
            self,
            Error::Config(_) | Error::Parse { .. } | Error::InvalidParameter { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
