use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LaError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("row {0} of the generators is not in the rational span of the ambient lattice")]
    OutsideSpan(usize),
    #[error("row {0} of the generators is in the span but not in the ambient lattice")]
    OutsideLattice(usize),
}
