use thiserror::Error;

use crate::edge::EdgeId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid vertex pair ({u}, {v}) for n = {n}")]
    InvalidVertex { u: usize, v: usize, n: usize },

    /// A claim on an edge that is not free. Always an engine bug, never a game outcome.
    #[error("illegal move: edge {0:?} is not free")]
    IllegalMove(EdgeId),

    #[error("no free edge left on the board")]
    EmptyBoard,

    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// A request exceeds the size guard of an exact (exponential) search.
    #[error("scope guard: {0}")]
    Scope(String),

    /// An internal invariant failed: strategy state, surgery or observer check.
    #[error("internal consistency: {0}")]
    Consistency(String),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn consistency(msg: impl Into<String>) -> Self {
        Error::Consistency(msg.into())
    }
}
