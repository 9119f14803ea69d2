use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The values are not a rearrangement of {1..n}.
    #[error("not a permutation of {{1..n}}: {0}")]
    NotAPermutation(String),

    /// The permutation is not a single n-cycle.
    #[error("permutation is not a single n-cycle")]
    NotCyclic,

    /// The letter sequence is not a standard cycle form (leading 1, one copy
    /// of each letter).
    #[error("not a standard cycle form: {0}")]
    NotACycleForm(String),

    /// Word entries must be pairwise distinct positive integers.
    #[error("word entries must be pairwise distinct positive integers")]
    NotAWord,

    /// The request lies outside an operation's stated domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// The exhaustive oracle refuses sizes it cannot finish at desk scale.
    #[error("n = {n} exceeds the enumeration limit {max}")]
    LimitExceeded { n: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
