use thiserror::Error;

/// Errors raised by constructions whose preconditions fail.
///
/// Validators never return these; they report a [`Verdict`](crate::Verdict)
/// instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("duplicate id `{0}`")]
    DuplicateId(String),
    #[error("relation ({0}, {1}) is not a composable pair")]
    NotComposable(String, String),
    #[error("special arrow `{0}` is not a loop")]
    SpecialNotLoop(String),
    #[error("special loop `{0}` occurs in a relation")]
    SpecialInRelation(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("special loop `{0}` does not cut out a digon")]
    NoDigon(String),
    #[error("invalid string: {0}")]
    InvalidString(String),
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("nonzero winding number {0}")]
    NonzeroWinding(i64),
    #[error("region {0} has no boundary marked point")]
    InteriorRegion(String),
    /// A construction error located in an input file.
    #[error("{line}:{column}: {source}")]
    At {
        line: usize,
        column: usize,
        source: Box<Error>,
    },
    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
