use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("zero direction")]
    ZeroDirection,
    #[error("degenerate system")]
    Degenerate,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolytopeError {
    #[error("unbounded polytope")]
    Unbounded,
    #[error("empty polytope")]
    Empty,
    #[error("degenerate polytope (affine dimension {affine_dim} < {dim})")]
    Degenerate { dim: usize, affine_dim: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DelzantError {
    /// Vertex numbers in diagnostics are 1-based positions in lexicographic order.
    #[error("not simple at vertex {vertex} ({facets} facets meet there)")]
    NotSimple { vertex: usize, facets: usize },
    #[error("not unimodular at vertex {vertex} (det = {det})")]
    NotUnimodular { vertex: usize, det: String },
    #[error("invalid generator arguments: {0}")]
    Generator(String),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
}

impl From<ExactError> for DelzantError {
    fn from(e: ExactError) -> Self {
        DelzantError::Polytope(e.into())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PackingError {
    #[error("not a packing: {0}")]
    NotAPacking(String),
    #[error("radius {radius} at vertex {vertex} exceeds the corner radius {max}")]
    NotAdmissible {
        vertex: usize,
        radius: String,
        max: String,
    },
    #[error("radii vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PerturbError {
    #[error("fan changed")]
    FanChanged,
    #[error("not Delzant: {0}")]
    NotDelzant(DelzantError),
    #[error("lost facet {0}")]
    LostFacet(usize),
    #[error("empty")]
    Empty,
    #[error("degenerate (affine dimension {0})")]
    Degenerate(usize),
    #[error("parameter has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("inadmissible sample at t = {t}: {reason}")]
    InadmissibleSample {
        t: String,
        reason: Box<PerturbError>,
    },
    #[error(transparent)]
    Packing(#[from] PackingError),
}
