use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph is not outerplanar")]
    NotOuterplanar,
    #[error("graph is not planar")]
    NotPlanar,
    #[error("embedding is inconsistent: {0}")]
    EmbeddingInconsistent(&'static str),
    #[error("triangulation is incomplete around vertex {0}")]
    TriangulationIncomplete(u32),
    #[error("no dividing point for leaf ending at vertex {0}")]
    NoDividingPoint(u32),
    #[error("k = {k} exceeds the vertex count {n}")]
    KTooLarge { k: usize, n: usize },
    #[error("instance has {n} vertices, above the brute-force cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("table boundaries do not match")]
    BoundaryMismatch,
    #[error("infeasible generator spec: {0}")]
    InfeasibleSpec(&'static str),
    #[error("invalid graph: {0}")]
    InvalidGraph(&'static str),
}
