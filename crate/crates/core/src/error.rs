use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("relation contains a cycle through `{0}` and `{1}`")]
    CycleDetected(String, String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("duplicate element label `{0}`")]
    DuplicateElement(String),
    #[error("size limit exceeded: {what} ({size} > {limit})")]
    SizeLimitExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("invalid order matrix: {0}")]
    InvalidOrder(String),
    #[error("invalid realizer: {0}")]
    InvalidRealizer(String),
    #[error("linear order is not an extension of the poset: {0}")]
    NotAnExtension(String),
    #[error("linear extension is separating: ({0}, {1}, {2})")]
    NotNonSeparating(String, String, String),
    #[error("poset is not a lattice: {0}")]
    NotALattice(String),
    #[error("lattice is not distributive: {0}")]
    NotDistributive(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_size(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(Error::SizeLimitExceeded { what, size, limit })
    } else {
        Ok(())
    }
}
