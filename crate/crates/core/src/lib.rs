pub mod analysis;
pub mod classical;
pub mod error;
pub mod exceptional;
pub mod library;
pub mod numfield;
pub mod polycore;
pub mod report;

pub use classical::ParamSet;
pub use error::{Error, Result};
pub use numfield::{GaussianRational, Rat, Scalar};
pub use report::{Residual, Status, VerificationReport};

/// Exact polynomials over the Gaussian rationals.
pub type ExactPoly = polycore::Poly<GaussianRational>;
/// Exact parameter sets.
pub type ExactParams = ParamSet<GaussianRational>;
/// Double-precision complex polynomials.
pub type FloatPoly = polycore::Poly<num_complex::Complex64>;
/// Double-precision parameter sets.
pub type FloatParams = ParamSet<num_complex::Complex64>;
