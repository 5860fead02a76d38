use thiserror::Error;

use crate::shift::SigmaFate;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("input vectors are linearly dependent")]
    DependentVectors,

    #[error("invalid vertex address '{0}'")]
    BadAddress(String),

    #[error("edge label {label} out of range for valence {n}")]
    LabelOutOfRange { label: u32, n: u32 },

    #[error("valence {0} is not supported here")]
    BadValence(u32),

    #[error("ball centers {0:?} and {1:?} are not adjacent")]
    NotAdjacent(String, String),

    #[error("subtree is empty")]
    EmptySubtree,

    #[error("subtree is not connected")]
    Disconnected,

    #[error("orientation mismatch between operands")]
    OrientationMismatch,

    #[error("the zero representation is not accepted here")]
    ZeroRepresentation,

    #[error("module is decomposable")]
    Decomposable,

    #[error("morphism is not injective at vertex {0:?}")]
    NotInjective(String),

    #[error("invalid representation: {0}")]
    Invalid(String),

    #[error("seed vertex {vertex:?} has the wrong parity: {reason}")]
    Parity { vertex: String, reason: String },

    #[error("module is not regular: {0}")]
    NotRegular(SigmaFate),

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("iteration cap of {0} shift steps exceeded")]
    IterationCap(usize),

    #[error("insufficient window [{lo}, {hi}]: need at least [{need_lo}, {need_hi}]")]
    InsufficientWindow {
        lo: i64,
        hi: i64,
        need_lo: i64,
        need_hi: i64,
    },

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
