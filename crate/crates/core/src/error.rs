use thiserror::Error;

use crate::graph6::Graph6Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count {n} outside supported range 1..=64")]
    VertexCount { n: usize },

    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },

    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("disjoint union would have {n} vertices (limit 64)")]
    SizeOverflow { n: usize },

    #[error(transparent)]
    Graph6(#[from] Graph6Error),

    #[error("malformed edge list: {0}")]
    EdgeList(String),

    /// A parameter is outside the domain on which the quantity is defined.
    #[error("{what} = {value} is out of range (allowed {min}..={max})")]
    OutOfRange {
        what: &'static str,
        value: u64,
        min: u64,
        max: u64,
    },

    /// A named construction does not exist for the requested parameters.
    #[error("construction unavailable: {0}")]
    Construction(String),

    /// The request is well-formed but too large for the exhaustive method.
    #[error("capability limit: {0}")]
    Capability(String),
}

impl Error {
    pub(crate) fn out_of_range(what: &'static str, value: u64, min: u64, max: u64) -> Self {
        Error::OutOfRange {
            what,
            value,
            min,
            max,
        }
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Graph6(_) | Error::EdgeList(_))
    }

    pub fn is_capability(&self) -> bool {
        matches!(self, Error::Capability(_))
    }
}
