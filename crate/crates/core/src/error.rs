use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Failure modes shared by every operation in the crate.
///
/// `Malformed` covers input that cannot even be represented (unknown vertex
/// ids, bad document versions, unparsable arguments). `Domain` covers
/// well-formed input that violates an operation's precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("invalid graph: {}", .0.join("; "))]
    InvalidGraph(Vec<String>),

    #[error("genus {genus} is below the required minimum {required}")]
    GenusTooSmall { genus: i64, required: i64 },

    #[error("graph is not quasistable")]
    NotQuasistable,

    #[error("graph is not semistable")]
    NotSemistable,

    #[error("graph is not stable")]
    NotStable,

    #[error("multidegree is not balanced: {0}")]
    NotBalanced(String),

    #[error("{0}")]
    Domain(String),

    #[error("graph has {0} vertices, at most 64 are supported")]
    TooManyVertices(usize),

    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("graph generation failed: {0}")]
    Generation(String),
}

impl Error {
    /// Short stable token naming the error class, used in CLI diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Malformed(_) => "malformed",
            Error::InvalidGraph(_) => "invalid-graph",
            Error::GenusTooSmall { .. } => "genus-too-small",
            Error::NotQuasistable => "not-quasistable",
            Error::NotSemistable => "not-semistable",
            Error::NotStable => "not-stable",
            Error::NotBalanced(_) => "not-balanced",
            Error::Domain(_) => "domain",
            Error::TooManyVertices(_) => "too-many-vertices",
            Error::Internal(_) => "internal",
            Error::Generation(_) => "generation",
        }
    }

    /// The message without the prefix that restates [`Error::kind`].
    pub fn detail(&self) -> String {
        match self {
            Error::Malformed(s)
            | Error::NotBalanced(s)
            | Error::Domain(s)
            | Error::Internal(s)
            | Error::Generation(s) => s.clone(),
            Error::InvalidGraph(v) => v.join("; "),
            other => other.to_string(),
        }
    }

    pub fn is_malformed(&self) -> bool {
        matches!(self, Error::Malformed(_))
    }
}
