use thiserror::Error;

/// Errors raised by diagram, class, supervector and graph operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rectangle {n}x{m}: both sides must be positive")]
    InvalidRect { n: usize, m: usize },

    #[error("operation requires gcd(n, m) = 1, got n={n}, m={m}")]
    NonCoprimeConfig { n: usize, m: usize },

    #[error("invalid partition {parts:?}: {reason}")]
    InvalidPartition { parts: Vec<usize>, reason: String },

    #[error("invalid word {word:?}: {reason}")]
    InvalidWord { word: String, reason: String },

    #[error("invalid root {label}: indices out of range for {n}x{m}")]
    InvalidRoot { label: String, n: usize, m: usize },

    #[error("box {root} is not a corner of {parts:?}")]
    NotACorner { parts: Vec<usize>, root: String },

    #[error("{op} requires {predicate}, which fails for {parts:?}")]
    PredicateViolated { op: &'static str, predicate: &'static str, parts: Vec<usize> },

    #[error("class is not in the domain of the morphism for {root}")]
    NotInDomain { root: String },

    #[error("vector is not on the hyperplane for {root}")]
    NotOnHyperplane { root: String },

    #[error("two incomparable descending paths support {count} zeros each")]
    AmbiguousPath { count: usize },

    #[error("search cap of {cap} vertices exceeded")]
    CapExceeded { cap: usize },

    #[error("no chain of positive morphisms connects the two classes")]
    NotComparable,

    #[error("degree window [{lo}, {hi}] contains no vertices")]
    WindowEmpty { lo: i64, hi: i64 },

    #[error("shift {k} exceeds the supported range |k| <= 2^40")]
    KOutOfRange { k: i64 },

    #[error("invalid kappa {text}: {reason}")]
    InvalidKappa { text: String, reason: String },

    #[error("supervector has shape ({a}|{b}), expected ({n}|{m})")]
    DimensionMismatch { a: usize, b: usize, n: usize, m: usize },

    #[error("window graph discrepancy: {0}")]
    Discrepancy(String),
}

pub type Result<T> = std::result::Result<T, Error>;
