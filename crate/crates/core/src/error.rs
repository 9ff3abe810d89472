use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("frame is empty")]
    EmptyFrame,
    #[error("non-finite value {0} in frame or payoffs")]
    NonFiniteValue(f64),
    #[error("empty set given mass {0}")]
    EmptyFocal(f64),
    #[error("masses sum to {sum}, expected 1 within {tolerance:e}")]
    MassSumViolation { sum: f64, tolerance: f64 },
    #[error("element {0} is not in the frame")]
    UnknownElement(f64),
    #[error("mass {0} is not strictly positive")]
    NonPositiveMass(f64),
    #[error("probability {0} is negative or not finite")]
    InvalidProbability(f64),
    #[error("interval lower bound {lower} exceeds upper bound {upper}")]
    InvertedInterval { lower: f64, upper: f64 },
    #[error("rho {0} is outside [0, 1]")]
    RhoOutOfRange(f64),
    #[error("no rho for focal element {0:?} and no default")]
    MissingRho(Vec<f64>),
    #[error("{0:?} is not a focal element of the mass function")]
    UnknownFocal(Vec<f64>),
    #[error("focal element {0:?} has no singleton mass to redistribute over")]
    NoSingletonMass(Vec<f64>),
    #[error("{what}: {count} exceeds the enumeration limit of {limit}")]
    TooLarge {
        what: &'static str,
        count: f64,
        limit: f64,
    },
    #[error("schema error: {0}")]
    Schema(String),
    #[error("leaf has no outcomes")]
    EmptyOutcome,
    #[error("decision node {0:?} has no branches")]
    EmptyDecision(String),
    #[error("decision node {node:?} repeats action {action:?}")]
    DuplicateAction { node: String, action: String },
    #[error("node id {0:?} is used more than once")]
    DuplicateNodeId(String),
    #[error("branch cost {0} is negative or not finite")]
    InvalidCost(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
