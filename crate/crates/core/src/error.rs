use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A size or shape parameter is outside the supported domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid pulse chain: {0}")]
    InvalidChain(String),

    #[error("invalid lattice path: {0}")]
    InvalidPath(String),

    /// Two paths of a tuple share a vertex where disjointness is required.
    #[error("paths {0} and {1} intersect")]
    Intersecting(usize, usize),

    #[error("malformed document: {0}")]
    InvalidDocument(String),

    #[error("invalid v-bar tuple: {0}")]
    InvalidVBars(String),

    /// An edge set that should be a Kekulé structure is not one, or its
    /// v-bars do not follow the expected row pattern.
    #[error("structure violation: {0}")]
    StructureViolation(String),

    #[error("budget exceeded: {what} needs {needed}, budget is {budget}")]
    BudgetExceeded {
        what: &'static str,
        needed: String,
        budget: String,
    },

    /// An internal consistency check failed.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn budget(what: &'static str, needed: impl ToString, budget: impl ToString) -> Self {
        Error::BudgetExceeded {
            what,
            needed: needed.to_string(),
            budget: budget.to_string(),
        }
    }
}
