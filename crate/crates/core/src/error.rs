use thiserror::Error;

/// Errors shared across the crate. Operations that cannot fail simply
/// return their value; anything that validates input or enforces a
/// resource limit returns `Result<_, Error>`.
#[derive(Debug, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyInput,

    #[error("generator values must be positive")]
    ZeroValue,

    #[error("generators are not coprime (gcd {gcd})")]
    NotCoprime { gcd: u64 },

    #[error("generator value {value} exceeds the exact-arithmetic cap")]
    ValueTooLarge { value: u64 },

    #[error("multiplicity {value} exceeds the supported cap of 2^31 - 1")]
    MultiplicityTooLarge { value: u64 },

    #[error("input too large for {what} (value {value})")]
    ResourceLimit { what: &'static str, value: u64 },

    #[error("arithmetic overflow: {0}")]
    Overflow(&'static str),

    #[error("operation is undefined for the trivial semigroup (S = N)")]
    TrivialSemigroup,

    #[error("not an equality instance: delta = {delta}")]
    NotEqualityInstance { delta: i64 },

    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),

    #[error("theorem hypotheses not met (rho = {rho})")]
    HypothesesNotMet { rho: u64 },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("estimated work {estimated} exceeds the budget of {budget} (raise the budget to proceed)")]
    LimitTooLarge { estimated: u64, budget: u64 },

    #[error("sampling gave up after {attempts} attempts")]
    ExhaustedRetries { attempts: u64 },

    #[error("invalid sample spec: {0}")]
    InvalidSampleSpec(String),

    #[error("bad checkpoint: {0}")]
    Checkpoint(String),

    #[error("worker pool: {0}")]
    WorkerPool(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
