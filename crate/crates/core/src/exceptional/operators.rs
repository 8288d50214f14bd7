use super::{exceptional_poly, xi_poly};
use crate::classical::{check_shape_invariance_with, potential, ParamSet, PotentialPair, Realization};
use crate::error::{Error, Result};
use crate::numfield::Scalar;
use crate::polycore::{Poly, RatFunc};
use crate::report::{Residual, Status, Timer, VerificationReport};

/// The values of `ξ_ℓ` that enter the deformed operators, as rational
/// functions of the coordinate variable.
struct XiShifts<T> {
    /// `ξ_ℓ(η(x + iγ/2); λ)`
    plus: RatFunc<T>,
    /// `ξ_ℓ(η(x − iγ/2); λ)`
    minus: RatFunc<T>,
    /// `ξ_ℓ(η(x); λ)`
    here: RatFunc<T>,
    /// `ξ_ℓ(η(x ∓ iγ/2); λ+δ)` and `ξ_ℓ(η(x); λ+δ)`
    next_plus: RatFunc<T>,
    next_minus: RatFunc<T>,
    next_here: RatFunc<T>,
    next_poly: Poly<T>,
}

impl<T: Scalar> XiShifts<T> {
    fn new(re: &Realization<T>, ell: usize, lambda: &ParamSet<T>) -> Result<Self> {
        let xi = xi_poly(ell, lambda);
        let next_poly = xi_poly(ell, &lambda.plus_delta(1));
        if xi.is_zero() || next_poly.is_zero() {
            return Err(Error::Degenerate(format!("xi_{ell} vanishes identically at {lambda:?}")));
        }
        Ok(Self {
            plus: re.eta_shifted(&xi, -1),
            minus: re.eta_shifted(&xi, 1),
            here: re.eta_shifted(&xi, 0),
            next_plus: re.eta_shifted(&next_poly, -1),
            next_minus: re.eta_shifted(&next_poly, 1),
            next_here: re.eta_shifted(&next_poly, 0),
            next_poly,
        })
    }
}

/// `V_ℓ(x; λ) = V(x; λ+ℓδ) · ξ_ℓ(η(x+iγ/2); λ)/ξ_ℓ(η(x−iγ/2); λ)
/// · ξ_ℓ(η(x−iγ); λ+δ)/ξ_ℓ(η(x); λ+δ)` and its conjugate.
pub fn deformed_potential<T: Scalar>(ell: usize, lambda: &ParamSet<T>) -> Result<PotentialPair<T>> {
    if ell == 0 {
        return Ok(potential(lambda));
    }
    let re = Realization::of(lambda);
    let xi = XiShifts::new(&re, ell, lambda)?;
    let base = potential(&lambda.plus_delta(ell as i32));
    let ratio = &(&xi.plus * &re.eta_shifted(&xi.next_poly, 2)) / &(&xi.minus * &xi.next_here);
    Ok(PotentialPair::from_v(&re, &base.v * &ratio))
}

/// `F_ℓ p = i/(φ ξ_ℓ(η; λ)) · (ξ_ℓ(η(x+iγ/2); λ+δ) p(η(x−iγ/2))
/// − ξ_ℓ(η(x−iγ/2); λ+δ) p(η(x+iγ/2)))`.
pub fn apply_forward_ell<T: Scalar>(ell: usize, lambda: &ParamSet<T>, p: &Poly<T>) -> Result<Poly<T>> {
    let re = Realization::of(lambda);
    let xi = XiShifts::new(&re, ell, lambda)?;
    let diff = &(&xi.next_plus * &re.eta_shifted(p, 1)) - &(&xi.next_minus * &re.eta_shifted(p, -1));
    let r = &diff.scale(&T::i()) / &(&re.phi() * &xi.here);
    re.pull_back(&r, "deformed forward shift")
}

/// `B_ℓ p = −i/ξ_ℓ(η; λ+δ) · (V(λ+ℓδ) ξ_ℓ(η(x+iγ/2); λ) (φp)(x−iγ/2)
/// − V*(λ+ℓδ) ξ_ℓ(η(x−iγ/2); λ) (φp)(x+iγ/2))`.
pub fn apply_backward_ell<T: Scalar>(ell: usize, lambda: &ParamSet<T>, p: &Poly<T>) -> Result<Poly<T>> {
    let re = Realization::of(lambda);
    let xi = XiShifts::new(&re, ell, lambda)?;
    let pot = potential(&lambda.plus_delta(ell as i32));
    let g = &re.phi() * &re.eta_shifted(p, 0);
    let r = &(&(&pot.v * &xi.plus) * &re.shift(&g, 1)) - &(&(&pot.v_star * &xi.minus) * &re.shift(&g, -1));
    let r = &r.scale(&-T::i()) / &xi.next_here;
    re.pull_back(&r, "deformed backward shift")
}

/// `H̃_ℓ p − E p`, with `H̃_ℓ` in its four-term form.
pub fn htilde_residual<T: Scalar>(ell: usize, lambda: &ParamSet<T>, p: &Poly<T>, energy: &T) -> Result<RatFunc<T>> {
    let re = Realization::of(lambda);
    let xi = XiShifts::new(&re, ell, lambda)?;
    let pot = potential(&lambda.plus_delta(ell as i32));
    let here = re.eta_shifted(p, 0);
    let down = &(&re.eta_shifted(p, 2) * &xi.next_here) - &(&re.eta_shifted(&xi.next_poly, 2) * &here);
    let up = &(&re.eta_shifted(p, -2) * &xi.next_here) - &(&re.eta_shifted(&xi.next_poly, -2) * &here);
    let left = &(&pot.v * &xi.plus) * &(&down / &(&xi.minus * &xi.next_here));
    let right = &(&pot.v_star * &xi.minus) * &(&up / &(&xi.plus * &xi.next_here));
    Ok(&(&left + &right) - &here.scale(energy))
}

/// Exact check of `H̃_ℓ P_{ℓ,n} = E_{ℓ,n} P_{ℓ,n}`.
pub fn htilde_eigencheck<T: Scalar>(ell: usize, n: usize, lambda: &ParamSet<T>) -> Result<VerificationReport> {
    let timer = Timer::start();
    let p = exceptional_poly(ell, n, lambda)?;
    let r = htilde_residual(ell, lambda, &p, &lambda.energy_ell(ell, n))?;
    let mut params = lambda.summary();
    params["ell"] = ell.into();
    params["n"] = n.into();
    Ok(timer.exact("deformed_eigen_identity", params, &r))
}

/// Both shape-invariance relations for `V_ℓ`, with `E_{ℓ,1}(λ)`.
pub fn check_shape_invariance_ell<T: Scalar>(ell: usize, lambda: &ParamSet<T>) -> Result<VerificationReport> {
    let mut params = lambda.summary();
    params["ell"] = ell.into();
    check_shape_invariance_with(
        "deformed_shape_invariance",
        lambda,
        params,
        |mu| deformed_potential(ell, mu),
        &lambda.energy_ell(ell, 1),
    )
}

/// `F_ℓ P_{ℓ,n}(λ) = f_{ℓ,n} P_{ℓ,n−1}(λ+δ)` and
/// `B_ℓ P_{ℓ,n−1}(λ+δ) = b_{ℓ,n−1} P_{ℓ,n}(λ)`; for `n = 0`, `F_ℓ` must
/// annihilate `P_{ℓ,0}`.
pub fn check_forward_backward<T: Scalar>(ell: usize, n: usize, lambda: &ParamSet<T>) -> Result<VerificationReport> {
    let timer = Timer::start();
    let here = exceptional_poly(ell, n, lambda)?;
    let f = apply_forward_ell(ell, lambda, &here)?;
    let mut residuals = Vec::new();
    if n == 0 {
        residuals.push(f);
    } else {
        let next = exceptional_poly(ell, n - 1, &lambda.plus_delta(1))?;
        residuals.push(&f - &next.scale(&lambda.forward_coeff_ell(ell, n)));
        let b = apply_backward_ell(ell, lambda, &next)?;
        residuals.push(&b - &here.scale(&lambda.backward_coeff_ell(ell, n - 1)));
    }
    let mut params = lambda.summary();
    params["ell"] = ell.into();
    params["n"] = n.into();
    Ok(match residuals.iter().find(|r| !r.is_zero()) {
        None => timer.finish("forward_backward", params, Status::Pass, None),
        Some(r) => timer.finish("forward_backward", params, Status::Fail, Some(Residual::from_poly(r))),
    })
}
