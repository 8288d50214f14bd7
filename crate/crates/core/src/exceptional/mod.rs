//! The X_ℓ deformations: the deforming polynomial `ξ_ℓ`, deformed potentials,
//! the exceptional polynomials `P_{ℓ,n}` with their closed-form
//! coefficients, deformed shift operators and the Rodrigues chain.

mod coeffs;
mod operators;
mod rodrigues;

pub use coeffs::{exceptional_coeffs, ExceptionalCoeffs};
pub use operators::{
    apply_backward_ell, apply_forward_ell, check_forward_backward, check_shape_invariance_ell, deformed_potential,
    htilde_eigencheck, htilde_residual,
};
pub use rodrigues::{check_missing_degrees, check_rodrigues, exact_rank, rodrigues_construct};

use num_traits::Zero;

use crate::classical::{classical_eval, classical_poly, norm_h, NormValue, ParamSet};
use crate::error::Result;
use crate::numfield::{GaussianRational, Scalar};
use crate::polycore::{Family, Poly, Var};

/// `𝔱(λ) = (−λ₁, −λ₂, λ₃, λ₄)`.
pub fn twist<T: Scalar>(lambda: &ParamSet<T>) -> ParamSet<T> {
    lambda.twist()
}

/// `ξ_ℓ(η; λ) = P_ℓ(η; 𝔱(λ + (ℓ−1)δ))`, with `ξ₀ = 1`.
pub fn xi_poly<T: Scalar>(ell: usize, lambda: &ParamSet<T>) -> Poly<T> {
    if ell == 0 {
        return Poly::one(Var::Eta);
    }
    classical_poly(ell, &lambda.plus_delta(ell as i32 - 1).twist())
}

/// `λ + δ + δ'`: `(λ₁, λ₂, λ₃ + 1, λ₄ + 1)`.
fn plus_delta_delta_prime<T: Scalar>(lambda: &ParamSet<T>) -> ParamSet<T> {
    lambda.shifted([0, 0, 2, 2])
}

/// `P_{ℓ,n}(η; λ) = a_{ℓ,n}(η) P_n(η; λ+ℓδ) + b_{ℓ,n}(η) P_{n−1}(η; λ+ℓδ)`,
/// with
/// `a_{ℓ,n} = ξ_ℓ(λ+δ) + a_{ℓ,n,1} ξ_{ℓ−1}(λ+δ+δ') + a_{ℓ,n,2} ξ_{ℓ−2}(λ+2δ+δ')`
/// and `b_{ℓ,n} = b_{ℓ,n,1} ξ_{ℓ−1}(λ+δ+δ')`.
pub fn exceptional_poly<T: Scalar>(ell: usize, n: usize, lambda: &ParamSet<T>) -> Result<Poly<T>> {
    if ell == 0 {
        return Ok(classical_poly(n, lambda));
    }
    let c = exceptional_coeffs(ell, n, lambda)?;
    let shifted = lambda.plus_delta(ell as i32);
    let mid = plus_delta_delta_prime(lambda);
    let xi_mid = xi_poly(ell - 1, &mid);
    let mut a = &xi_poly(ell, &lambda.plus_delta(1)) + &xi_mid.scale(&c.a1);
    if ell >= 2 && !c.a2.is_zero() {
        a = &a + &xi_poly(ell - 2, &mid.plus_delta(1)).scale(&c.a2);
    }
    let mut p = &a * &classical_poly(n, &shifted);
    if n >= 1 && !c.b1.is_zero() {
        p = &p + &(&xi_mid.scale(&c.b1) * &classical_poly(n - 1, &shifted));
    }
    Ok(p)
}

/// `ξ_ℓ` at a single point, from `η` and `1 − η`.
pub fn xi_eval<T: Scalar>(ell: usize, lambda: &ParamSet<T>, eta: &T, one_minus_eta: &T) -> T {
    if ell == 0 {
        return T::one();
    }
    classical_eval(ell, &lambda.plus_delta(ell as i32 - 1).twist(), eta, one_minus_eta)
}

/// `P_{ℓ,n}` at a single point, assembled from its three-part structure
/// rather than from the monomial expansion, so that the `q → 1` regime
/// keeps its accuracy.
pub fn exceptional_eval<T: Scalar>(
    ell: usize,
    n: usize,
    lambda: &ParamSet<T>,
    eta: &T,
    one_minus_eta: &T,
) -> Result<T> {
    if ell == 0 {
        return Ok(classical_eval(n, lambda, eta, one_minus_eta));
    }
    let c = exceptional_coeffs(ell, n, lambda)?;
    let shifted = lambda.plus_delta(ell as i32);
    let mid = plus_delta_delta_prime(lambda);
    let xi_mid = xi_eval(ell - 1, &mid, eta, one_minus_eta);
    let mut a = xi_eval(ell, &lambda.plus_delta(1), eta, one_minus_eta) + c.a1 * xi_mid.clone();
    if ell >= 2 && !c.a2.is_zero() {
        a = a + c.a2 * xi_eval(ell - 2, &mid.plus_delta(1), eta, one_minus_eta);
    }
    let mut p = a * classical_eval(n, &shifted, eta, one_minus_eta);
    if n >= 1 && !c.b1.is_zero() {
        p = p + c.b1 * xi_mid * classical_eval(n - 1, &shifted, eta, one_minus_eta);
    }
    Ok(p)
}

impl<T: Scalar> ParamSet<T> {
    /// `E_{ℓ,n}(λ) = E_n(λ + ℓδ)`.
    pub fn energy_ell(&self, ell: usize, n: usize) -> T {
        self.plus_delta(ell as i32).energy(n)
    }

    /// `f_{ℓ,n}(λ) = f_n(λ + ℓδ)`.
    pub fn forward_coeff_ell(&self, ell: usize, n: usize) -> T {
        self.plus_delta(ell as i32).forward_coeff(n)
    }

    /// `b_{ℓ,n}(λ) = b_n(λ + ℓδ)`.
    pub fn backward_coeff_ell(&self, ell: usize, n: usize) -> T {
        self.plus_delta(ell as i32).backward_coeff(n)
    }

    /// `h_{ℓ,n} / h_n(λ + ℓδ)`.
    pub fn norm_ratio_ell(&self, ell: usize, n: usize) -> T {
        // the closed form is 0/0 at ℓ = 0 when a₃a₄ = q
        if ell == 0 {
            return T::one();
        }
        let a = self.a();
        let (l, n) = (ell as i64, n as i64);
        match self.family() {
            Family::Wilson => {
                let sa = a[0].clone() + a[1].clone();
                let sb = a[2].clone() + a[3].clone();
                let t = |x: i64| T::from_i64(x);
                (sa.clone() + t(n + l)) * (sb.clone() + t(n + 2 * l - 1)) / ((sa + t(n)) * (sb + t(n + l - 1)))
            }
            Family::AskeyWilson => {
                let q = self.q();
                let pa = a[0].clone() * a[1].clone();
                let pb = a[2].clone() * a[3].clone();
                let qp = |k: i64| q.powi(k as i32);
                let one = T::one();
                qp(-l) * (one.clone() - pa.clone() * qp(n + l)) * (one.clone() - pb.clone() * qp(n + 2 * l - 1))
                    / ((one.clone() - pa * qp(n)) * (one - pb * qp(n + l - 1)))
            }
        }
    }
}

/// `h_{ℓ,n}(λ)`: the prefactor times `h_n(λ + ℓδ)`.
pub fn norm_h_ell(ell: usize, n: usize, lambda: &ParamSet<GaussianRational>) -> NormValue {
    let ratio = lambda.norm_ratio_ell(ell, n);
    match norm_h(n, &lambda.plus_delta(ell as i32)) {
        NormValue::PiTimes(r) if ratio.im.is_zero() => NormValue::PiTimes(r * ratio.re),
        other => NormValue::Numeric(other.to_f64() * ratio.to_c64().re),
    }
}

/// Closed-form hermiticity condition for `ℓ = 1`:
/// `(a₃+a₄)(a₁a₂+¼) < (a₁+a₂)(a₃a₄+¼)` (Wilson) or
/// `(a₁+a₂)(1−a₃a₄) − (a₃+a₄)(1−a₁a₂) > (s + 1/s)(a₁a₂ − a₃a₄)`
/// (Askey-Wilson).
pub fn hermiticity_l1<T: Scalar>(lambda: &ParamSet<T>) -> bool {
    hermiticity_l1_margin(lambda) > T::Real::zero()
}

/// Signed slack of the `ℓ = 1` hermiticity inequality; positive inside.
pub fn hermiticity_l1_margin<T: Scalar>(lambda: &ParamSet<T>) -> T::Real {
    let a = lambda.a();
    let sa = a[0].clone() + a[1].clone();
    let sb = a[2].clone() + a[3].clone();
    let pa = a[0].clone() * a[1].clone();
    let pb = a[2].clone() * a[3].clone();
    let one = T::one();
    let m = match lambda.family() {
        Family::Wilson => {
            let quarter = T::ratio(1, 4);
            sa * (pb + quarter.clone()) - sb * (pa + quarter)
        }
        Family::AskeyWilson => {
            let s = lambda.s().clone();
            sa * (one.clone() - pb.clone()) - sb * (one.clone() - pa.clone()) - (s.clone() + one / s) * (pa - pb)
        }
    };
    m.re()
}

#[cfg(test)]
mod tests;
