use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("2-core of {partition} is not the staircase of size {r}")]
    CoreMismatch { partition: String, r: usize },
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("{what}: n = {n} exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        n: usize,
        bound: usize,
    },
    #[error("malformed tableau: {0}")]
    MalformedTableau(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("weight {alpha}a + {beta}b ties with zero under xi = {xi}; perturb xi")]
    IrrationalityViolation { alpha: i32, beta: i32, xi: String },
    #[error("xi must be a positive non-integer rational, got {0}")]
    InvalidXi(String),
    #[error("cells do not match insertion fibers: {0}")]
    ConjectureAViolation(String),
    #[error("residue {i} out of range for e = {e}")]
    BadResidue { i: usize, e: usize },
    #[error("divided power f_{i}^({a}) left a non-integral coefficient")]
    NonIntegralDivision { i: usize, a: u32 },
    #[error("canonical basis convention violation: {0}")]
    ConventionViolation(String),
    #[error("{0} is not in the crystal component of the empty bipartition")]
    NotUglov(String),
    #[error("charges {0} and {1} give non-isomorphic highest weight modules")]
    IncompatibleCharges(String, String),
    #[error("charge {0} outside the supported range: {1}")]
    ChargeOutOfRange(String, String),
    #[error("trace functions of the simple modules are linearly dependent")]
    RankDeficiency,
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
