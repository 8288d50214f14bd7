use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// A closed-form coefficient hit a vanishing denominator.
    #[error("degenerate parameters: {0}")]
    Degenerate(String),

    /// A quotient that must be an exact polynomial left a remainder. This
    /// always indicates a bug, never bad input.
    #[error("inexact division in {context}: remainder {remainder}")]
    InexactDivision { context: String, remainder: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("singular configuration: {0}")]
    Singular(String),

    #[error("quadrature did not converge: estimate {estimate:e}, error estimate {error:e}")]
    Quadrature { estimate: f64, error: f64 },

    #[error("argument principle inconclusive: {0}")]
    Inconclusive(String),
}
