use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("edge {edge} has endpoint {vertex} outside 0..{vertex_count}")]
    VertexOutOfRange {
        edge: usize,
        vertex: usize,
        vertex_count: usize,
    },
    #[error("edge {0} is a loop")]
    Loop(usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("{what}: expected {expected} entries, got {got}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("edge length of edge {0} must be at least 1")]
    NonPositiveLength(usize),
    #[error("cochain does not lie in the cut space")]
    NotInCutSpace,
    #[error("vertex function must have coordinate sum zero")]
    NonzeroSum,
    #[error("divisor is not G-admissible")]
    NotAdmissible,
    #[error("orientation must orient every edge")]
    PartialOrientation,
    #[error("orientation has a directed cycle")]
    CyclicOrientation,
    #[error("subgraph selected by the tile is not connected")]
    DisconnectedTile,
    #[error("vertex set does not define a bond of the tile subgraph")]
    NotABond,
    #[error("point lies outside the cube around d(f)")]
    OutsideCube,
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_len(what: &'static str, expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::LengthMismatch {
            what,
            expected,
            got,
        })
    }
}
