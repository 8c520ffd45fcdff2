use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {id} out of range for graph on {n} vertices")]
    VertexOutOfRange { id: usize, n: usize },

    #[error("duplicate vertex {0} in vertex set")]
    DuplicateVertex(usize),

    #[error("vertex sets are not disjoint (both contain {0})")]
    NotDisjoint(usize),

    #[error("invalid interval: lo {lo} > hi {hi}")]
    InvalidInterval { lo: String, hi: String },

    #[error("position {pos} out of range for ordering of length {n}")]
    PositionOutOfRange { pos: usize, n: usize },

    #[error("relation contains a cycle: {witness:?}")]
    Cycle { witness: Vec<usize> },

    #[error("edge ({u},{v}) of G is missing from layer {layer}")]
    SupergraphViolation { u: usize, v: usize, layer: usize },

    #[error("layer {layer} has {got} vertices, expected {expected}")]
    LayerSize { layer: usize, got: usize, expected: usize },

    #[error("malformed instance: {0}")]
    Format(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("model refused: {0}")]
    Refused(String),

    #[error("base solver contract violated: {0}")]
    Contract(String),

    #[error("oracle refuses n = {n} (cap {cap})")]
    OracleCap { n: usize, cap: usize },
}
