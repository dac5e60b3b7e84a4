use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A chord count above the configured enumeration or summation cap.
    #[error("n = {n} exceeds the {what} cap ({cap}); raise it with {raise}")]
    CapExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
        raise: &'static str,
    },

    /// A brute-force sum that would run past the elementary-product budget.
    #[error("brute-force sum needs {cost} products, over the budget of {budget}; raise it with --oracle-budget")]
    BudgetExceeded { cost: u128, budget: u128 },

    /// A field pattern that is empty, odd-length, mixed, or unbalanced.
    #[error("invalid field pattern: {0}")]
    InvalidPattern(String),

    /// A diagram whose endpoints are not exactly 1..=2n, each used once.
    #[error("malformed diagram `{input}`: {reason}")]
    MalformedDiagram { input: String, reason: String },

    /// An argument outside an operation's domain (e.g. n = 0).
    #[error("{0}")]
    InvalidArgument(String),
}
