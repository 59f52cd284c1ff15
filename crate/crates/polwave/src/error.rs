//! Error types shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument left the mathematical domain of an operation
    /// (e.g. a non-propagating wave vector).
    #[error("domain error: {0}")]
    Domain(String),

    /// A quadrature self-consistency check failed.
    #[error("quadrature failure: {what} (residual {residual:.3e} > tol {tol:.3e})")]
    Quadrature {
        what: String,
        residual: f64,
        tol: f64,
    },

    /// Two fields that must share a direction grid do not.
    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    /// An operation that requires a (transverse-)isotropic medium was
    /// called with data violating that symmetry.
    #[error("isotropy violation: {what} (deviation {deviation:.3e})")]
    Isotropy { what: String, deviation: f64 },

    /// The evolved coherence matrix lost positive semidefiniteness beyond
    /// the tolerated roundoff band; usually signals a too-large step.
    #[error("positivity breach at z = {z:.6e}: min eigenvalue {min_eig:.3e} (trace {trace:.3e})")]
    Positivity { z: f64, min_eig: f64, trace: f64 },

    /// Total energy drifted more than tolerated during evolution.
    #[error("energy drift at z = {z:.6e}: relative drift {drift:.3e} > tol {tol:.3e}")]
    EnergyDrift { z: f64, drift: f64, tol: f64 },

    /// An integrated matrix that must be a scalar multiple of the identity
    /// is not, beyond tolerance.
    #[error("non-scalar matrix: {what} (deviation {deviation:.3e})")]
    NonScalar { what: String, deviation: f64 },

    /// Division by a vanishing total energy.
    #[error("zero energy: {0}")]
    ZeroEnergy(String),

    /// Per-step energy drift in the stochastic integrator exceeded its bound.
    #[error("step-size error at z = {z:.6e}: per-step energy drift {drift:.3e}")]
    StepSize { z: f64, drift: f64 },

    /// Configuration file problems (parse errors, unknown keys, bad values).
    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    /// Process exit status for the CLI: 1 for validation problems,
    /// 2 for failed numerical checks.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) | Error::Config(_) | Error::Io(_) => 1,
            _ => 2,
        }
    }
}
