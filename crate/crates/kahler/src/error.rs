//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("grade {grade} outside 0..=4")]
    GradeOutOfRange { grade: usize },
    #[error("dagger requires H with H^2 = 1 (residual {residual:.3e})")]
    InvalidHermitizer { residual: f64 },
}

/// Syntax error in a multivector literal, with a byte position.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("syntax error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

#[derive(Debug, Error)]
pub enum GeneratorError {
    #[error("generator conditions failed: {failed:?}")]
    Invalid { failed: Vec<String> },
}

#[derive(Debug, Error)]
pub enum IdealError {
    #[error("form is not in the left ideal: |Ut - U| = {distance:.3e}")]
    NotInIdeal { distance: f64 },
}

#[derive(Debug, Error)]
pub enum SpinError {
    #[error("not a Spin(1,3) element: {reason} (residual {residual:.3e})")]
    NotSpin { reason: String, residual: f64 },
    #[error("bivector square is not a ±1 scalar within tolerance (off-scalar norm {off_scalar:.3e})")]
    NonSimpleBivector { off_scalar: f64 },
    #[error("exponential series did not converge (tail bound {tail:.3e})")]
    SeriesDiverged { tail: f64 },
    #[error("conjugation S* e^{mu} S leaks outside grade 1 (norm {leak:.3e})")]
    GradeLeak { mu: usize, leak: f64 },
    #[error("matrix is not proper orthochronous Lorentz: {condition} (residual {residual:.3e})")]
    NotLorentz { condition: String, residual: f64 },
}

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),
    #[error("fd step must be positive, got {0}")]
    BadFdStep(f64),
    #[error("samples must be >= 1")]
    BadSamples,
    #[error("electron mass must be nonnegative, got {0}")]
    BadMass(f64),
    #[error("suite '{0}' does not support the exact backend")]
    UnsupportedBackend(String),
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
    #[error("invalid field spec: {0}")]
    BadFieldSpec(String),
}
