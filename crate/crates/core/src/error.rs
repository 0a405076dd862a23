use thiserror::Error;

/// Errors produced by the numerical layers of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid model function: {0}")]
    InvalidModel(String),

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("no sign change on [{a}, {b}]: f(a) = {fa:e}, f(b) = {fb:e}")]
    NoBracket { a: f64, b: f64, fa: f64, fb: f64 },

    #[error("root iteration failed to converge after {0} steps")]
    RootIterations(usize),

    #[error("quadrature did not converge: last relative change {0:e}")]
    QuadratureNonConvergent(f64),

    #[error("energy level too close to the heteroclinic level (E = {0:e}); shrink E")]
    EnergyHorizon(f64),

    #[error("no nodal-class solution: lambda = {lambda} <= j^2 = {jsq}")]
    BelowBifurcation { lambda: f64, jsq: f64 },

    #[error("r = {requested} unreachable; achievable range is [0, {reachable}]")]
    RangeUnreachable { requested: f64, reachable: f64 },

    #[error("profile endpoint miss |phi(pi)| = {miss:e} exceeds tolerance {tol:e}")]
    EndpointMiss { miss: f64, tol: f64 },

    #[error("grid mismatch: operator needs {expected} interior points, profile has {got}")]
    GridMismatch { expected: usize, got: usize },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
