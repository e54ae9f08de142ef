use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error in {input:?}: {reason}")]
    Syntax { input: String, reason: String },

    #[error("trivial equation: both sides reduce to {0}")]
    TrivialEquation(String),

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("the free strict 2-PIM is infinite")]
    NotFinite,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("bound {bound} too small, need at least {required}")]
    BoundTooSmall { bound: usize, required: usize },

    #[error("more than {cap} elements generated")]
    CapExceeded { cap: usize },

    #[error("unknown witness case {0:?}")]
    UnknownCase(String),

    #[error("invalid topology: {0}")]
    InvalidTopology(String),

    #[error("topology file, line {line}: {reason}")]
    TopologyFormat { line: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
