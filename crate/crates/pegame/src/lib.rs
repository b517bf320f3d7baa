//! File formats, scenario presets, batch runs and the command-line front end
//! for the pursuit-evasion simulator in `pegame-core`.

pub mod batch;
pub mod cli;
pub mod clock;
pub mod config;
pub mod output;
pub mod reference;

pub use pegame_core;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("config error: {0}")]
    Config(String),
    #[error("{0}: {1}")]
    Io(String, #[source] std::io::Error),
    #[error(transparent)]
    Core(#[from] pegame_core::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
}
