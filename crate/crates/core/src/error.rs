use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("filling does not match shape: {0}")]
    ShapeMismatch(String),

    /// A family rule is broken. Rows and columns are 1-based positions.
    #[error("{family} violation: {rule} at {location}")]
    Violation {
        family: &'static str,
        rule: &'static str,
        location: String,
    },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("unsupported pattern {0:?}")]
    UnsupportedPattern(String),

    #[error("wrong family: expected {expected}, got {got}")]
    WrongFamily {
        expected: &'static str,
        got: &'static str,
    },

    #[error("orientation contains a directed cycle")]
    CyclicOrientation,

    #[error("subgraph is not a spanning tree: {0}")]
    NotSpanningTree(String),

    #[error("edge order is not compatible with the shape: {0}")]
    IncompatibleOrder(String),

    #[error("configuration is not stable at vertex {0}")]
    Unstable(usize),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("stabilization exceeded {0} topplings")]
    ToppleLimit(u64),

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    #[error("guardrail exceeded: {0}")]
    Guardrail(String),

    #[error("no {0} construction for this conversion")]
    Unsupported(String),

    #[error("internal invariant broken: {0}")]
    Internal(String),
}
