use thiserror::Error;

/// Errors shared across the crate.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("ground set must contain at least one item")]
    EmptyGroundSet,

    #[error("item index {index} out of range for ground set of size {ground}")]
    InvalidIndex { index: usize, ground: usize },

    #[error("duplicate item index {index}")]
    DuplicateItem { index: usize },

    #[error("budget k={k} exceeds ground set size n={n}")]
    BudgetExceedsGroundSet { k: usize, n: usize },

    #[error("invalid parameter: {what}")]
    InvalidParameter { what: &'static str },

    #[error("oblivious block size ceil(beta*tau)={s0} exceeds budget k={k}")]
    ObliviousBudget { s0: usize, k: usize },

    #[error("instance too large for {what}: {size} exceeds limit {limit}; use a heuristic instead")]
    InstanceTooLarge {
        what: &'static str,
        size: u128,
        limit: u128,
    },

    #[error("oracle is not normalized: f(empty set) = {value}, expected 0")]
    NotNormalized { value: f64 },

    #[error("inner solver did not converge: residual gradient norm {grad_norm}")]
    NonConvergence { grad_norm: f64 },

    #[error("objective is not strongly concave (m = {m}); use ridge > 0")]
    NotStronglyConcave { m: f64 },

    #[error("oracle does not support {op}")]
    UnsupportedOracle { op: &'static str },

    #[error("numerical failure in {what} (condition estimate {condition:e})")]
    Numerical { what: &'static str, condition: f64 },
}
