use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("coefficient count {found} does not match {expected} for this dimension")]
    CoefficientCount { expected: usize, found: usize },

    #[error("operation requires dimension {required}, got {found}")]
    UnsupportedDimension { required: usize, found: usize },

    #[error("vector must be nonzero")]
    ZeroVector,

    #[error("non-finite coefficient")]
    NonFinite,

    #[error("matrix is not antisymmetric at ({row}, {col})")]
    NotAntisymmetric { row: usize, col: usize },

    #[error("points are affinely dependent")]
    AffinelyDependent,

    #[error("expected {expected} points, got {found}")]
    PointCount { expected: usize, found: usize },

    #[error("reference points are collinear")]
    Collinear,

    #[error("data is not a moment function (relative residual {residual:e})")]
    NotMomentFunction { residual: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
