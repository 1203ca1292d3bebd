use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph order must be at least 1")]
    EmptyGraph,
    #[error("negative color {0}")]
    NegativeColor(i64),
    #[error("color {0} exceeds the supported maximum of 255")]
    ColorTooLarge(i64),
    #[error("undirected edge ({u},{v}) given with conflicting colors")]
    AsymmetricUndirectedEdge { u: usize, v: usize },
    #[error("arc ({u},{v}) given twice with conflicting colors")]
    ConflictingArc { u: usize, v: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("vertex {0} listed more than once")]
    DuplicateVertex(usize),
    #[error("key of length {len} does not encode a {} graph", if *.directed { "directed" } else { "undirected" })]
    BadLength { len: usize, directed: bool },
    #[error("not a permutation of 0..{0}")]
    BadPermutation(usize),
    #[error("invalid ordered partition: {0}")]
    BadPartition(String),
    #[error("order {order} exceeds the configured limit of {limit}")]
    OrderTooLarge { order: usize, limit: usize },
    #[error("type too large: {0}")]
    TypeTooLarge(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("graphlet order {k} exceeds host order {order}")]
    KExceedsOrder { k: usize, order: usize },
    #[error("host uses {what} color {color}, outside the declared palette of {palette}")]
    ColorOutOfBounds {
        what: &'static str,
        color: u8,
        palette: u8,
    },
    #[error("subgraph key {0} missing from catalog")]
    KeyNotInCatalog(String),
    #[error("cache directory {0} does not exist")]
    CacheDirMissing(PathBuf),
    #[error("corrupt catalog {}: {reason}", path.display())]
    CorruptCatalog { path: PathBuf, reason: String },
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
