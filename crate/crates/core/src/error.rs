use thiserror::Error;

use crate::graph::MAX_VERTICES;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph on {0} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),

    #[error("vertex {vertex} is out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("invalid family spec `{spec}`: {reason}")]
    FamilySpec { spec: String, reason: String },

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("automorphism group order exceeds the cap of {cap}")]
    GroupOrderCap { cap: u128 },

    #[error("automorphism group has {order} elements; listing is capped at {cap}")]
    ElementListCap { order: u128, cap: u128 },

    #[error("more than {cap} footprints; raise the footprint cap to continue")]
    FootprintCap { cap: usize },

    #[error("search node budget of {budget} exhausted (best bounds: {lower} <= optimum <= {upper})")]
    NodeBudget { budget: u64, lower: u64, upper: u64 },

    #[error("search range exceeded: {0}")]
    SearchRange(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("the pattern has no copies in the host graph")]
    NoFootprints,

    #[error("vertex set is not a system of representatives: footprint {missed:?} is missed")]
    NotHittingSet { missed: Vec<usize> },

    #[error("weight construction failed: {0}")]
    Construction(String),

    #[error("exact arithmetic overflow")]
    Overflow,
}

impl Error {
    /// Errors caused by a configured limit rather than by bad input.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            Error::GroupOrderCap { .. }
                | Error::ElementListCap { .. }
                | Error::FootprintCap { .. }
                | Error::NodeBudget { .. }
                | Error::SearchRange(_)
                | Error::TooManyVertices(_)
        )
    }
}
