use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("signature must have at least one entry")]
    EmptySignature,
    #[error("malformed signature {0:?}: expected a string over {{0,1}}")]
    InvalidSignature(String),
    #[error("signature length {m} exceeds the supported maximum {max}")]
    TooLarge { m: usize, max: usize },
    #[error("cycle index {j} out of range for m = {m}")]
    CycleIndexOutOfRange { j: usize, m: usize },
    #[error("vertex {0} is not a vertex of this tournament")]
    VertexOutOfRange(String),
    #[error("an arc needs two distinct endpoints, got {0} twice")]
    SameVertex(String),
    #[error("({tail}, {head}) is not an arc of the tournament")]
    NotAnArc { tail: String, head: String },
    #[error("third vertex {0} coincides with an endpoint of the arc")]
    ThirdVertexOnArc(String),
    #[error("requires at least {min} vertices, tournament has {order}")]
    TooFewVertices { order: usize, min: usize },
    #[error("vertex count mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("malformed tournament dump: {0}")]
    MalformedDump(String),
    #[error("no arc lies in a unique directed triangle")]
    NoUniqueTriangleArc,
    #[error("census length {m} outside 1..={max}")]
    CensusCap { m: usize, max: usize },
    #[error("automorphism of W_{0} moves * although an arc lies in a unique directed triangle")]
    StarNotFixed(String),
}
