use thiserror::Error;

/// Errors raised by constructors, deciders and the verification harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed descriptor: {0}")]
    MalformedDescriptor(String),
    #[error("{what} has size {actual}, exceeding the bound {limit}")]
    SizeBoundExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("axiom violation: {0}")]
    AxiomViolation(String),
    #[error("element {0} is not in the carrier")]
    InvalidElement(String),
    #[error("operands live over different rings")]
    RingMismatch,
    #[error("the zero ring is not admissible here")]
    ZeroRing,
    #[error("the zero module is not admissible here")]
    ZeroModule,
    #[error("submodules are not nested")]
    NotNested,
    #[error("the ideal must be proper")]
    ImproperIdeal,
    #[error("containment violated: {0}")]
    ContainmentViolation(String),
    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),
    #[error("annihilator mismatch: {0}")]
    AnnihilatorMismatch(String),
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
    #[error("resource bound exceeded: {0}")]
    ResourceBound(String),
    #[error("syntax error at line {line}, column {column}: expected {expected}")]
    Syntax {
        line: usize,
        column: usize,
        expected: String,
    },
    #[error("out of representable range: {0}")]
    OutOfRange(String),
}

impl Error {
    /// True for errors that mean "instance too large", which the harness skips
    /// and counts rather than reporting as failures.
    pub fn is_resource_bound(&self) -> bool {
        matches!(
            self,
            Error::SizeBoundExceeded { .. } | Error::ResourceBound(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
