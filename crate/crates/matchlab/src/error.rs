use thiserror::Error;

/// Crate-wide error type. Every variant names the violated constraint and
/// the offending value, so callers can print a single-line diagnostic.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("p must be a positive count of hard types, got {p}")]
    InvalidTypeCount { p: usize },
    #[error("lambda must satisfy 0 < lambda and p*lambda < 1, got lambda={lambda} with p={p}")]
    LambdaOutOfRange { lambda: f64, p: usize },
    #[error("arrival rate m must be >= 1, got {m}")]
    ArrivalRateTooSmall { m: f64 },
    #[error("alpha must lie in (0,1), got {alpha}")]
    AlphaOutOfRange { alpha: f64 },
    #[error("horizon must be positive, got {horizon}")]
    HorizonNonPositive { horizon: f64 },

    #[error("pool state needs at least one easy and one hard type, got {len} entries")]
    PoolTooShort { len: usize },
    #[error("pool sizes must be nonnegative and finite, entry {index} is {value}")]
    NegativePoolSize { index: usize, value: f64 },
    #[error("type index {index} out of range for p={p}")]
    TypeIndexOutOfRange { index: usize, p: usize },
    #[error("exact subset enumeration capped at p<={cap}, got p={p} with unequal hard sizes")]
    TooManyHardTypes { p: usize, cap: usize },

    #[error("simulation warmup must end before the stop bound")]
    WarmupBeyondStop,
    #[error("event budget overflow: more than {max} events requested")]
    EventBudgetOverflow { max: u64 },
    #[error("measurement window is empty or saw no arrivals")]
    EmptyWindow,
    #[error("no departed agents of type {type_index} in the window")]
    NoDepartures { type_index: usize },
    #[error("agent records require the deadline-calendar criticality mode")]
    AgentRecordsNeedCalendar,

    #[error("step size underflow at t={t} (h={h}); the field may be stiff here")]
    StepSizeUnderflow { t: f64, h: f64 },
    #[error("bracketing failed: no sign change of f-g over [{lo}, {hi}]")]
    BracketingFailure { lo: f64, hi: f64 },
    #[error("stationary residual {residual} exceeds tolerance {tol}")]
    ResidualTooLarge { residual: f64, tol: f64 },
    #[error("stationary solution has a nonpositive size: ({s0}, {s1})")]
    NonPositiveStationary { s0: f64, s1: f64 },

    #[error("sweep needs at least one axis value, policy, engine and replication")]
    EmptySweep,
    #[error("sweep cell (axis={axis_value}, {policy}, {engine}) failed: {source}")]
    SweepCell {
        axis_value: f64,
        policy: String,
        engine: String,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
