use thiserror::Error;

/// Errors produced by domain construction, sampling and the numerical solvers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),
    #[error("disc radius must be positive and finite, got {0}")]
    InvalidRadius(f64),
    #[error("the origin must lie strictly inside the domain")]
    OriginNotInterior,
    #[error("point ({0}, {1}) is not interior to the domain")]
    PointNotInterior(f64, f64),
    #[error("kappa must lie in [0, 0.99], got {0}")]
    KappaOutOfRange(f64),
    #[error("halfwidth must be positive and finite, got {0}")]
    InvalidHalfwidth(f64),
    #[error("empty sample set")]
    EmptySamples,
    #[error("non-finite sample value at index {0}")]
    NonFiniteSample(usize),
    #[error("quantile argument must lie in (0, 1), got {0}")]
    QuantileOutOfRange(f64),
    #[error("{0} has no density")]
    NoDensity(&'static str),
    #[error("invalid sampler config: {0}")]
    InvalidConfig(String),
    #[error("walk exceeded {max_steps} steps")]
    StepCapExceeded { max_steps: u64 },
    #[error("quadrature did not converge: |delta phi_hat({n})| = {delta:.3e} at {panels} panels")]
    QuadratureNonConvergence { n: usize, delta: f64, panels: usize },
    #[error("symmetrized region has empty interior")]
    EmptyRegion,
    #[error("curve is not simple: segments {0} and {1} intersect")]
    NonSimpleCurve(usize, usize),
    #[error("no interior grid nodes at mesh size h = {0}")]
    NoInteriorNodes(f64),
    #[error("eigenvalue iteration did not converge within {0} iterations")]
    EigenNonConvergence(usize),
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
