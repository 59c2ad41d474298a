use dijoin::apps::AppError;
use dijoin::basis::BasisError;
use dijoin::faces::FaceError;
use dijoin::{DigraftError, GraphError};
use thiserror::Error;

use crate::instance::InstanceError;

/// Command failures, split by exit code: 2 for unreadable or malformed
/// input, 3 when the input violates a precondition, 4 when a claimed
/// property fails on valid input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("precondition unmet: {0}")]
    Precondition(String),
    #[error("property violated: {0}")]
    Violation(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Violation(_) => 4,
        }
    }
}

impl From<InstanceError> for CliError {
    fn from(e: InstanceError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<FaceError> for CliError {
    fn from(e: FaceError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<DigraftError> for CliError {
    fn from(e: DigraftError) -> Self {
        match e {
            DigraftError::Invariant(_)
            | DigraftError::CrossingMismatch
            | DigraftError::Disagreement(_) => CliError::Violation(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<BasisError> for CliError {
    fn from(e: BasisError) -> Self {
        match e {
            BasisError::Digraft(d) => d.into(),
            BasisError::EmptyFace | BasisError::BudgetExceeded(_) => {
                CliError::Precondition(e.to_string())
            }
            _ => CliError::Violation(e.to_string()),
        }
    }
}

impl From<AppError> for CliError {
    fn from(e: AppError) -> Self {
        match e {
            AppError::Graph(g) => g.into(),
            AppError::Face(f) => f.into(),
            AppError::Digraft(d) => d.into(),
            AppError::Basis(b) => b.into(),
            AppError::TheoremViolation(_) | AppError::Lattice(_) => CliError::Violation(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}
