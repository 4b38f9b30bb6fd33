//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimMismatch { expected: usize, actual: usize },

    #[error("matrix is not Hermitian (max deviation {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    #[error("subsystem index {index} out of range for {count} subsystems")]
    InvalidSubsystem { index: usize, count: usize },

    #[error("measurement setting {setting} out of range (have {settings})")]
    InvalidSetting { setting: usize, settings: usize },

    #[error("signaling requires at least two measurement settings")]
    NeedTwoSettings,

    #[error("Kraus set is not trace preserving: {0}")]
    InvalidChannel(String),

    #[error("parse error: {0}")]
    ParseError(String),

    #[error("invariant violated: {0}")]
    ValidationError(String),

    #[error("strategy enumeration too large: {outcomes}^{settings} exceeds {bound}")]
    TooManyStrategies {
        settings: usize,
        outcomes: usize,
        bound: u64,
    },

    #[error("numerical trouble: {0}")]
    NumericalTrouble(String),

    #[error("chain length {n} outside supported range [2, 8]")]
    InvalidChainLength { n: usize },

    #[error("unphysical noise parameters: {0}")]
    UnphysicalNoise(String),

    #[error("master-equation integration unstable: trace drift {drift:.3e}")]
    IntegrationUnstable { drift: f64 },

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("incomplete tomography: {0}")]
    IncompleteTomography(String),

    #[error("report I/O failed for {path}: {source}")]
    ReportError {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
