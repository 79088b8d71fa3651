use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not Hermitian (max asymmetry {asymmetry:.3e}, tolerance {tolerance:.3e})")]
    NotHermitian { asymmetry: f64, tolerance: f64 },

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("invalid game: {0}")]
    InvalidGame(String),

    #[error("beta must be finite and non-negative, got {0}")]
    InvalidBeta(f64),

    #[error("payoff has imaginary residue {0:.3e}; payoff matrix and state do not form a Hermitian pair")]
    ImaginaryResidue(f64),

    #[error("stability analysis requires diagonal payoff matrices and states: {0}")]
    NotClassical(String),

    #[error("unknown builtin game `{0}` (expected prisoners-dilemma, hawk-dove, penny-classical or penny-quantum)")]
    UnknownBuiltin(String),

    #[error("line {line}: {field}: {message}")]
    GameFile {
        line: usize,
        field: String,
        message: String,
    },

    #[error("{0}")]
    Usage(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}
