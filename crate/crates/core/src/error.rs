use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("uniformity must be at least 2, got {0}")]
    UniformityTooSmall(usize),
    #[error("vertex {vertex} is outside [1, {n}]")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex sets of size {expected} expected, got {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("edge {0:?} is not a strictly increasing tuple of positive integers")]
    InvalidEdge(Vec<usize>),
    #[error("duplicate edge {0:?}")]
    DuplicateEdge(Vec<usize>),
    #[error("at most {max} vertices are supported, got {n}")]
    TooManyVertices { n: usize, max: usize },
    #[error("vertices of a pair must be distinct, got {0} twice")]
    SameVertex(usize),
    #[error("clique order {order} is below the uniformity {r}")]
    OrderBelowUniformity { order: usize, r: usize },
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LagrangianError {
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error("weighting has {found} coordinates but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("invalid weighting: {0}")]
    InvalidWeighting(String),
    #[error("invalid solver configuration: {0}")]
    InvalidConfig(String),
    #[error("vertex pair ({i}, {j}) is not left-compressed: E_{{{j}\\{i}}} is nonempty")]
    NotCompressedPair { i: usize, j: usize },
    #[error("pair ({i}, {j}) must satisfy i < j")]
    PairOrder { i: usize, j: usize },
    #[error("complete Lagrangian needs t >= r, got t = {t}, r = {r}")]
    OrderBelowUniformity { t: usize, r: usize },
    #[error("grid certification supports 3-graphs only, got r = {0}")]
    UnsupportedUniformity(usize),
    #[error("grid certification needs a positive denominator")]
    ZeroDenominator,
    #[error("grid scan of {points} points exceeds the budget of {budget}")]
    BudgetExceeded { points: u128, budget: u128 },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("order l = {0} is too small (need l >= {1})")]
    OrderTooSmall(usize, usize),
    #[error("target size {0} is below the seed size 5")]
    TargetTooSmall(usize),
    #[error("triple {0:?} is not a strictly increasing triple of positive integers")]
    InvalidTriple([usize; 3]),
    #[error("triple {0:?} has a direct ancestor outside the set")]
    NotUpClosed([usize; 3]),
    #[error("expected a 3-graph, got uniformity {0}")]
    NotThreeUniform(usize),
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error(transparent)]
    Lagrangian(#[from] LagrangianError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("malformed candidate: {0}")]
    MalformedCandidate(String),
    #[error("failed to serialize report: {0}")]
    Serialize(#[from] serde_json::Error),
}
