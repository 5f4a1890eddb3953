use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty operand")]
    EmptyOperand,
    #[error("invalid interval [{lo}, {hi}]")]
    InvalidInterval { lo: u64, hi: u64 },
    #[error("{value} is not divisible by {divisor}")]
    NotDivisible { value: u64, divisor: u64 },
    #[error("divisor must be positive")]
    ZeroDivisor,
    #[error("sum_if_sparse needs an even number of sets, got {0}")]
    OddLevel(usize),
    #[error("item {value} outside [1, {max}]")]
    ItemOutOfRange { value: u64, max: u64 },
    #[error("instance too large: n*w = {n}*{w} must stay below 2^63")]
    Overflow { n: u64, w: u64 },
    #[error("multiset has a {alpha}-almost divisor {divisor}")]
    HasAlmostDivisor { alpha: u64, divisor: u64 },
    #[error("caller must ensure mass: sigma(D) = {sigma} < 3t/2 with t = {t}")]
    InsufficientMass { sigma: u64, t: u64 },
    #[error("oracle budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("dense evidence violates condition ({condition}): {detail}")]
    InvalidEvidence {
        condition: &'static str,
        detail: String,
    },
    #[error("threshold not actually met: no k in [2, {max_k}] has enough large sets")]
    ThresholdNotMet { max_k: u64 },
    #[error("invalid configuration: {0}")]
    Config(String),
}
