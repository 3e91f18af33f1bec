use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("group has more than {limit} elements; full element lists are capped")]
    ElementLimit { limit: usize },

    #[error("degree {degree} is above the configured bound {bound}")]
    DegreeAboveBound { degree: usize, bound: usize },

    #[error("invalid orbit pairing: {0}")]
    InvalidPairing(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("malformed graph: {0}")]
    Graph(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("not a strongly confluent partial orientation: {0}")]
    InvalidScpo(String),

    #[error("vertex set does not induce a cotree of the diagram: {0}")]
    NotACotree(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("star hypotheses violated: {}", .0.join("; "))]
    StarHypotheses(Vec<String>),

    #[error("budget exceeded: predicted {predicted} exceeds budget {budget}")]
    BudgetExceeded { predicted: u128, budget: u128 },

    #[error("search bound of {0} nodes exceeded")]
    SearchLimit(usize),

    #[error("boundary vertex {0} has no complete neighbourhood in the ball")]
    BoundaryVertex(usize),

    #[error("invalid ball map: {0}")]
    InvalidBallMap(String),

    #[error("unknown strategy `{name}` (available: {available})")]
    UnknownStrategy { name: String, available: String },

    #[error("cross-check failed: {0}")]
    CrossCheck(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
