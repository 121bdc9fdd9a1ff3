use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("offset list is empty; at least one offset is required")]
    EmptyOffsets,
    #[error("offsets must be strictly increasing (t_{index} = {current} follows {previous})")]
    NonIncreasingOffsets {
        index: usize,
        previous: usize,
        current: usize,
    },
    #[error("offset {offset} out of range: offsets must satisfy 1 <= t_i <= n - 1 = {max}")]
    OffsetOutOfRange { offset: usize, max: usize },
    #[error("order n = {n} exceeds the construction limit {limit}")]
    OrderTooLarge { n: usize, limit: usize },
    #[error("vertex {vertex} out of range 1..={order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("graph of order {order} exceeds the oracle bound {bound}")]
    GraphTooLarge { order: usize, bound: usize },
    #[error("graph has more than {bound} maximal cliques")]
    TooManyCliques { bound: usize },
    #[error("vertex map is not a bijection: {reason}")]
    MapNotBijective { reason: String },
    #[error("parameters do not describe a cocoonery")]
    NotACocoonery,
    #[error("premise not met: {0}")]
    PremiseNotMet(String),
    #[error("undecided: the closed-form rules do not cover this graph and its order {order} exceeds the oracle bound {bound}")]
    Undecided { order: usize, bound: usize },
    #[error("invalid sweep specification: {0}")]
    InvalidSweep(String),
}

impl Error {
    /// True for the errors raised when an oracle refuses an input because of its size.
    pub fn is_bound_exceeded(&self) -> bool {
        matches!(
            self,
            Error::GraphTooLarge { .. } | Error::TooManyCliques { .. } | Error::Undecided { .. }
        )
    }
}
