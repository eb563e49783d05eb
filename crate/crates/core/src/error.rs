use thiserror::Error;

use crate::qstate::Basis;

#[derive(Debug, Error)]
pub enum ChinosError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("basis mismatch: {left:?} vs {right:?}")]
    BasisMismatch { left: Basis, right: Basis },

    #[error("unsupported basis for this operation: {0:?}")]
    UnsupportedBasis(Basis),

    #[error("null move: state norm {norm:e} is numerically zero")]
    NullMove { norm: f64 },

    #[error("degenerate angle: theta = {theta} is outside the admissible range {range}")]
    DegenerateAngle { theta: f64, range: &'static str },

    #[error("invalid choice label {label} (allowed: {allowed:?})")]
    InvalidChoice { label: usize, allowed: Vec<usize> },

    #[error("invalid guess {guess} (allowed: {allowed:?})")]
    InvalidGuess { guess: usize, allowed: Vec<usize> },

    #[error("restriction violated: |{guess_a} - {guess_b}| < {d0}")]
    RestrictionViolation { guess_a: usize, guess_b: usize, d0: f64 },

    #[error("intelligence violated: choice {choice} cannot produce guess {guess}")]
    IntelligenceViolation { choice: usize, guess: usize },

    #[error("invalid mixture: {0}")]
    InvalidMixture(String),

    #[error("root not bracketed on [{lo}, {hi}]")]
    RootNotBracketed { lo: f64, hi: f64 },

    #[error("block decomposition mismatch: {0}")]
    DecompositionMismatch(String),

    #[error("matrix is not a valid density operator: {0}")]
    InvalidDensity(String),

    #[error("parse error at line {line}, field {field}: {message}")]
    Parse { line: usize, field: usize, message: String },

    #[error("shape error: expected 16x16 entries, found {rows} rows with {cols} columns")]
    Shape { rows: usize, cols: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl ChinosError {
    /// True for failures caused by external data (files, parsing, shapes).
    pub fn is_data_error(&self) -> bool {
        matches!(
            self,
            ChinosError::Parse { .. }
                | ChinosError::Shape { .. }
                | ChinosError::Io(_)
                | ChinosError::Json(_)
                | ChinosError::Csv(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, ChinosError>;
