//! Floating-point layer: ground states, weights, quadrature, zero-free
//! certification and the Askey-Wilson to Wilson limit.

mod limit;
mod points;
mod quadrature;
pub mod special;
mod weight;
mod zeros;

pub use limit::{aw_params_for, aw_to_w_limit, check_limit, LimitConfig, LimitRow, LimitTable, Precision};
pub use points::{conjugate_at, deformed_potential_eval, eta_at, expm1_complex, potential_eval, EtaPoint};
pub use quadrature::{check_orthogonality, gram_matrix, integrate, orthogonality_integral, Integral, QuadratureConfig};
pub use weight::{
    domain, exceptional_at, groundstate_eval, ln_groundstate, ln_psi_ell, psi_ell_eval, sample_eigenfunction,
    EigenSample,
};
pub use zeros::{
    companion_count, count_real_zeros, polynomial_roots, rectangle_domain, zero_free_rectangle, RectangleDomain,
    RectangleReport,
};

#[cfg(test)]
mod tests;
