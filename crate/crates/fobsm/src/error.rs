use thiserror::Error;

/// Crate-wide error type.
///
/// Validation-style variants map to process exit code 1, I/O failures to
/// exit code 2 (see the `fobsm` binary).
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// Inputs outside the domain an operation is defined on (zero maturity,
    /// zero volatility, out-of-range fractional order, ...).
    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("gamma domain error: argument must be > 0, got {0}")]
    GammaDomain(f64),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    /// A feature or target column has (near-)zero standard deviation and
    /// cannot be z-scored.
    #[error("degenerate column: {0}")]
    DegenerateColumn(String),

    #[error("empty partition: {0}")]
    EmptyPartition(String),

    #[error("invalid config: {0}")]
    InvalidConfig(String),

    /// Structurally broken input files (bad CSV rows, bad model documents).
    #[error("malformed input: {0}")]
    Malformed(String),

    /// Model/stats/data disagree on dimensions or schema version.
    #[error("schema mismatch: {0}")]
    SchemaMismatch(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code the CLI reports for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
