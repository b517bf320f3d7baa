use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid reference orbit: {0}")]
    InvalidOrbit(&'static str),

    #[error("eccentricity {e} is outside the recommended bands (0 <= e <= 0.8, e = 1, e >= 1.2)")]
    EccentricityAdvisory { e: f64 },

    #[error("{what}: value {value} outside valid domain (limit {limit})")]
    Domain { what: &'static str, value: f64, limit: f64 },

    #[error("{0} requires a different orbit regime")]
    Regime(&'static str),

    #[error("matrix is singular or ill-conditioned (1-norm condition {condition:e})")]
    Singular { condition: f64 },

    #[error("invalid weights: {0}")]
    InvalidWeights(&'static str),

    #[error("invalid game configuration: {0}")]
    InvalidConfig(&'static str),
}
