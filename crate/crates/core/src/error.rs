use thiserror::Error;

/// Errors raised by the factor-chain routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid dimension: {0}")]
    Dimension(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range (valid range {lo}..={hi})")]
    Index { index: usize, lo: usize, hi: usize },

    /// A zero pivot or zero diagonal entry was met where a nonzero is required.
    #[error("singular matrix: zero pivot at position {position}{}", factor_suffix(*.factor))]
    Singular { factor: Option<usize>, position: usize },

    #[error("domain error: {0}")]
    Domain(String),

    /// The factor signs admit no cancellation-free evaluation.
    #[error("factor {factor} has a sign pattern outside the supported classes")]
    UnsupportedPattern { factor: usize },

    #[error("matrix is not TN-factorizable: pivot breakdown at ({row}, {col})")]
    NotTnFactorizable { row: usize, col: usize },

    #[error("derivative of order {needed} requested but only {available} available")]
    Capability { needed: usize, available: usize },

    #[error("equal points must be contiguous (point {index} repeats an earlier run)")]
    NonContiguousPoints { index: usize },

    #[error("size {n} exceeds the limit {max}")]
    Size { n: usize, max: usize },

    /// An interval computation could not decide the sign of a quantity.
    #[error("sign undecidable at the available precision: {0}")]
    Indeterminate(String),

    #[error("value has no exact representation: {0}")]
    NotRepresentable(String),

    #[error("parse error: {0}")]
    Parse(String),
}

fn factor_suffix(factor: Option<usize>) -> String {
    match factor {
        Some(k) => format!(" of factor {k}"),
        None => String::new(),
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Attaches a factor index to a singularity error.
    pub(crate) fn in_factor(self, k: usize) -> Self {
        match self {
            Error::Singular { position, .. } => Error::Singular { factor: Some(k), position },
            other => other,
        }
    }
}
