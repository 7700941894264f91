use thiserror::Error;

use crate::diagram::DiagramError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("n must be at least 2, got {0}")]
    InvalidN(i64),
    #[error("closure does not fit the pattern: {0}")]
    Closure(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}
