use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arm lengths must be at least 1, got ({0}, {1}, {2})")]
    InvalidArms(usize, usize, usize),
    #[error("path length must be at least 1")]
    EmptyPath,
    #[error("vertex {vertex} out of range for a diagram with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("vector has norm {0}, not a real root")]
    NotARealRoot(i64),
    #[error("a height bound is required for diagrams of non-finite type")]
    HeightBoundRequired,
    #[error("operation requires a diagram of finite type")]
    NotFinite,
    #[error("operation requires a diagram of affine type")]
    NotAffine,
    #[error("Cartan matrix is singular")]
    SingularCartan,
    #[error("no path of length two joins vertices {0} and {1}")]
    NotAPath(usize, usize),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("vertex {0} is the branch vertex")]
    BranchVertex(usize),
    #[error("unsupported diagram: {0}")]
    Unsupported(String),
    #[error("invalid restriction: {0}")]
    InvalidRestriction(String),
    #[error("element is not in the submodule M (functional value {0})")]
    NotInSubmodule(String),
    #[error("element is not in the span of the basis")]
    NotInSpan,
    #[error("coordinates are not all integers")]
    NotIntegral,
    #[error("element is not a member of the canonical basis")]
    NotInBasis,
    #[error("no integral decomposition as a 2-root: {0}")]
    NoDecomposition(String),
    #[error("roots are not orthogonal")]
    NotOrthogonal,
    #[error("unknown orbit id {0}")]
    UnknownOrbit(usize),
    #[error("group closure exceeded the cap of {0} elements")]
    StateCapExceeded(usize),
    #[error("no witness construction for Y({0}, {1}, {2})")]
    UnsupportedTriple(usize, usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
