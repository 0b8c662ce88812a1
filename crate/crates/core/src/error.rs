use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("digraph order must be at least 1")]
    EmptyOrder,
    #[error("loop at vertex {0} is not allowed")]
    Loop(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("edge {{{0}, {1}}} appears more than once")]
    MultiEdge(usize, usize),
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
    #[error("{what} requires order at least {min}, got {got}")]
    OrderTooSmall { what: &'static str, min: usize, got: usize },
    #[error("{0} is not strongly connected")]
    NotStrong(&'static str),
    #[error("{0} is not connected")]
    NotConnected(&'static str),
    #[error("source and sink must differ (both {0})")]
    SameEndpoints(usize),
    #[error("arc ({0}, {1}) is not an arc of the host digraph")]
    ForeignArc(usize, usize),
    #[error("arc set does not lie inside a single fiber")]
    NotInOneFiber,
    #[error("brute-force oracle limited to {cap} arcs, digraph has {got}")]
    ArcCapExceeded { cap: usize, got: usize },
    #[error("simple path enumeration exceeded the cap of {0} paths")]
    PathCapExceeded(usize),
    #[error("seed set must contain at least {min} distinct vertices")]
    SeedTooSmall { min: usize },
    #[error("construction produced an invalid certificate: {0}")]
    Construction(String),
    #[error("unsupported seed position: {0}")]
    UnsupportedPosition(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid class spec `{0}`")]
    ClassSpec(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
