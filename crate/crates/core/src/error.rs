use thiserror::Error;

/// Everything that can go wrong while building or auditing a computation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the tuple must contain at least one entry")]
    EmptyTuple,
    #[error("tuple entries must be positive, found {0}")]
    NonPositivePart(i64),
    #[error("period {period} is not a common multiple of the tuple entries")]
    NotCommonMultiple { period: u64 },
    #[error("period {period} exceeds the configured cap {cap}")]
    PeriodTooLarge { period: u64, cap: u64 },
    #[error("cyclotomic levels {left} and {right} differ")]
    LevelMismatch { left: u64, right: u64 },
    #[error("cannot lift from level {from} to level {to}")]
    BadLift { from: u64, to: u64 },
    #[error("cyclotomic level must be positive")]
    ZeroLevel,
    #[error("expected {expected} coefficients at this level, found {found}")]
    BadCoefficientCount { expected: usize, found: usize },
    #[error("value at level {level} is not rational")]
    NotRational { level: u64 },
    #[error("value is not a root of unity of order dividing {period}")]
    NotARoot { period: u64 },
    #[error("{0} divides no entry of the tuple")]
    NotAWaveIndex(u64),
    #[error("tuple entries are not pairwise coprime")]
    NotPairwiseCoprime,
    #[error("gcd of the tuple entries is {0}, not 1")]
    GcdNotOne(u64),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("invalid Rademacher index (h={h}, k={k}, l={l}) for r={r}")]
    BadIndex { r: usize, h: u64, k: u64, l: usize },
    #[error("cannot parse rational {0:?}")]
    ParseRational(String),
    #[error("audit failure in {formula}: {detail}")]
    Audit { formula: String, detail: String },
}

impl Error {
    pub fn audit(formula: &str, detail: impl Into<String>) -> Self {
        Error::Audit {
            formula: formula.to_string(),
            detail: detail.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
