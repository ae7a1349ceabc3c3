use thiserror::Error;

/// Errors raised by mosaic construction, measurement and verification.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("index {0} is not a vertex of the polytope")]
    NotAVertex(usize),
    #[error("cells {0} and {1} have overlapping interiors")]
    OverlappingCells(usize, usize),
    #[error("element not found: {0}")]
    NotFound(String),
    #[error("invalid tiling: {0}")]
    InvalidTiling(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("parameter `{0}` must be positive")]
    NonPositiveParameter(&'static str),
    #[error("operation requires a face-to-face mosaic")]
    NotFaceToFace,
    #[error("unknown mosaic or polyhedron name `{0}`")]
    UnknownName(String),
    #[error("vertex figure of node {0} is not a simplex")]
    VertexFigureNotSimplex(usize),
    #[error("truncation parameter {0} must lie strictly between 0 and 1/2")]
    EpsilonTooLarge(String),
    #[error("cell {0} is not a simplex")]
    NotSimplicial(usize),
    #[error("invalid ratio: {0}")]
    InvalidRatio(String),
    #[error("target {0} outside the admissible range")]
    OutOfRange(String),
    #[error("value below the simplex degree d+1: {0}")]
    BelowSimplexDegree(String),
    #[error("{{{0}}} is not a regular honeycomb with spherical cell and vertex figure")]
    NotAHoneycomb(String),
    #[error("degenerate denominator")]
    DegenerateDenominator,
    #[error("origin is not strictly interior to the polyhedron")]
    OriginNotInterior,
    #[error("too few points: need at least {need}, got {got}")]
    TooFewPoints { need: usize, got: usize },
    #[error("too few planes: need at least 3, got {0}")]
    TooFewPlanes(usize),
    #[error("coordinate magnitude exceeds the exact integer frame")]
    CoordinateOverflow,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o failure: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
