use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set mismatch: [{left}] vs [{right}]")]
    GroundMismatch { left: u32, right: u32 },

    #[error("element {element} outside ground set [{ground}]")]
    ElementOutOfRange { element: u32, ground: u32 },

    #[error("elements must be strictly increasing")]
    NotStrictlyIncreasing,

    #[error("operation requires a non-empty set")]
    EmptySet,

    #[error("size {k} out of range for ground set [{ground}]")]
    SizeOutOfRange { k: u32, ground: u32 },

    #[error("sets must have equal size ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },

    #[error("rank {rank} outside [1, {max}]")]
    RankOutOfRange { rank: String, max: String },

    #[error("family index {index} outside [1, {t}]")]
    FamilyIndex { index: usize, t: usize },

    #[error("invalid parameters: {reason}")]
    InvalidParams { reason: String },

    #[error("regime violation: {reason}")]
    RegimeViolation { reason: String },

    #[error("no {k}-set strictly precedes {set}")]
    NoPrecedingSet { k: u32, set: String },

    #[error("{set} lies outside the admissible ID window")]
    OutsideWindow { set: String },

    #[error("expected lex order {first} before {second}")]
    OrderViolation { first: String, second: String },

    #[error("search space {space} exceeds node budget {budget}")]
    BudgetExceeded { space: String, budget: u64 },

    #[error("search exceeded time budget of {seconds} s")]
    TimeBudgetExceeded { seconds: u64 },

    #[error("input families are not cross-intersecting")]
    NotCrossIntersecting,

    #[error("invalid family: {reason}")]
    InvalidFamily { reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
