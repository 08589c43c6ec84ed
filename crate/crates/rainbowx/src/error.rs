use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InputDomain(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("too few vertices: need at least {needed}, got {got}")]
    TooFewVertices { needed: usize, got: usize },

    #[error("size cap exceeded: {0}")]
    CapExceeded(String),

    #[error("coloring inconsistent with graph: {0}")]
    InconsistentColoring(String),

    #[error("precondition violated: input contains induced {pattern} (witness {witness:?})")]
    PreconditionViolated { pattern: String, witness: Vec<usize> },

    #[error("internal contract failed: {0}")]
    InternalContract(String),

    #[error("budget exceeded: best known bracket [{lower}, {upper}]")]
    BudgetExceeded { lower: usize, upper: usize },

    #[error("format error: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
