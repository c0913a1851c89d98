use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group too large: order exceeds cap {cap}")]
    TooLarge { cap: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("syntax error at line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),

    #[error("action not coprime: |A| = {action_order}, |G| = {group_order}")]
    NotCoprime {
        action_order: usize,
        group_order: usize,
    },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

pub type Result<T, E = GroupError> = std::result::Result<T, E>;
