use thiserror::Error;

use crate::graph::EdgeId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate edge id `{0}`")]
    DuplicateEdgeId(String),

    #[error("edge `{edge}` references unknown vertex `{vertex}`")]
    UnknownVertex { edge: String, vertex: String },

    #[error("infinite set of alternating paths (cycle through {})", render(.witness))]
    InfinitePathSet { witness: Vec<EdgeId> },

    #[error("infinite set of prime alternating cycles (overlapping cycles on {})", render(.witness))]
    InfiniteCycleSet { witness: Vec<EdgeId> },

    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    #[error("interface mismatch: {0}")]
    InterfaceMismatch(String),

    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    #[error("not a composite segment: {0}")]
    NotAComposite(String),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("incompatible groups: {0}")]
    IncompatibleGroups(String),

    #[error("incompatible actions: {0}")]
    IncompatibleActions(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// True for the two "infinite set" errors, which campaigns count as skips.
    pub fn is_infinite(&self) -> bool {
        matches!(
            self,
            Error::InfinitePathSet { .. } | Error::InfiniteCycleSet { .. }
        )
    }
}

fn render(ids: &[EdgeId]) -> String {
    ids.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
