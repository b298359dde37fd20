use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("convergence failure: {0}")]
    ConvergenceFailure(String),
    #[error("parameter pole: {0}")]
    ParameterPole(String),
    #[error("x = {x} outside the domain {domain}")]
    DomainError { x: f64, domain: String },
    #[error("level {n} is not a bound state (model admits {count})")]
    NoSuchLevel { n: usize, count: usize },
    #[error("transform singular: {reason} near x = {x}")]
    TransformSingular { reason: String, x: f64 },
    #[error("singular point: eta vanishes at x = {x}")]
    SingularPoint { x: f64 },
    #[error("wavenumber relation inconsistent: std {std:e} exceeds {tol:e}")]
    RelationInconsistent { std: f64, tol: f64 },
    #[error("no real kappa branch for k = {k}")]
    NoBranch { k: f64 },
    #[error("kappa and k are unrelated for this transform")]
    Unrelated,
    #[error("closed form unavailable: {0}")]
    ClosedFormUnavailable(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
