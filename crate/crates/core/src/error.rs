use thiserror::Error;

use crate::graph::Graph6Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex count {0} exceeds the supported maximum of {max}", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {b0} is not a neighbor of the measured vertex {vertex}")]
    NotANeighbor { vertex: usize, b0: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not 2-colorable")]
    NotBipartite,
    #[error("graph is already 2-colorable")]
    Bipartite,
    #[error("invalid bipartition mask {mask:#x} for {n} vertices")]
    InvalidBipartition { mask: u32, n: usize },
    #[error("n = {n} outside the supported range {min}..={max}")]
    UnsupportedSize { n: usize, min: usize, max: usize },
    #[error("graph on {n} vertices is not in the atlas")]
    NotInAtlas { n: usize },
    #[error("inconsistent bounds: {0}")]
    InconsistentBounds(String),
    #[error("orbit partition: {0}")]
    Partition(String),
    #[error("oracle: {0}")]
    Oracle(String),
    #[error("orbit cache: {0}")]
    Cache(String),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_size(n: usize, min: usize, max: usize) -> Result<()> {
    if n < min || n > max {
        return Err(Error::UnsupportedSize { n, min, max });
    }
    Ok(())
}
