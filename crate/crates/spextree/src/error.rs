use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A constructor or operation parameter violated its stated bound.
    #[error("parameter out of range: {0}")]
    Range(String),

    /// Malformed textual input (edge list or catalog expression).
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// The input graph is not a tree where one is required.
    #[error("not a tree: {0}")]
    NotATree(String),

    /// Power iteration hit the iteration cap; the bracket is the last
    /// certified interval containing the spectral radius.
    #[error("eigensolver did not converge within {iterations} iterations; last bracket [{lo}, {hi}]")]
    NoConvergence { iterations: u64, lo: f64, hi: f64 },

    /// An oracle or brute-force scan was asked to exceed its size budget.
    #[error("budget exceeded: {0}")]
    Budget(String),

    /// The requested operation is outside the classification domain
    /// (stars, undersized n, and similar trivial or excluded cases).
    #[error("out of classification domain: {0}")]
    Domain(String),

    #[error("invalid graph6 input: {0}")]
    Graph6(String),
}

pub type Result<T> = std::result::Result<T, Error>;
