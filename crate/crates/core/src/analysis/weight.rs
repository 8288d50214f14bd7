//! Ground states and the deformed weight `ψ_ℓ`.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::points::eta_at;
use super::special::{ln_abs_gamma, ln_abs_qpoch_inf};
use crate::error::{Error, Result};
use crate::exceptional::{exceptional_eval, xi_eval};
use crate::polycore::Family;
use crate::FloatParams;

/// Below this modulus `|ξ_ℓ(η(x − iγ/2))|` is treated as a zero of the
/// weight's denominator.
const SINGULAR_DENOMINATOR: f64 = 1e-14;

/// The open interval `(x₁, x₂)`.
pub fn domain(lambda: &FloatParams) -> (f64, f64) {
    match lambda.family() {
        Family::Wilson => (0.0, f64::INFINITY),
        Family::AskeyWilson => (0.0, PI),
    }
}

fn check_domain(lambda: &FloatParams, x: f64) -> Result<()> {
    let (lo, hi) = domain(lambda);
    if x > lo && x < hi {
        Ok(())
    } else {
        Err(Error::Domain(format!("x = {x} outside ({lo}, {hi})")))
    }
}

/// `log φ₀(x; λ)`.
pub fn ln_groundstate(lambda: &FloatParams, x: f64) -> Result<f64> {
    check_domain(lambda, x)?;
    let ix = Complex64::new(0.0, x);
    Ok(match lambda.family() {
        Family::Wilson => lambda.a().iter().map(|a| ln_abs_gamma(a + ix)).sum::<f64>() - ln_abs_gamma(ix * 2.0),
        Family::AskeyWilson => {
            let q = lambda.q().re;
            let z = ix.exp();
            // the first factor of (e^{2ix}; q)_∞ is |1 − e^{2ix}| = 2 sin x
            let top = (2.0 * x.sin()).ln() + ln_abs_qpoch_inf(z * z * q, q);
            top - lambda.a().iter().map(|a| ln_abs_qpoch_inf(a * z, q)).sum::<f64>()
        }
    })
}

/// `φ₀(x; λ) = |Π Γ(a_j + ix) / Γ(2ix)|` (Wilson) or
/// `|(e^{2ix}; q)_∞ / Π (a_j e^{ix}; q)_∞|` (Askey-Wilson).
pub fn groundstate_eval(lambda: &FloatParams, x: f64) -> Result<f64> {
    Ok(ln_groundstate(lambda, x)?.exp())
}

/// `log ψ_ℓ(x; λ)`, `ψ_ℓ = φ₀(x; λ+ℓδ) / |ξ_ℓ(η(x − iγ/2); λ)|`.
pub fn ln_psi_ell(ell: usize, lambda: &FloatParams, x: f64) -> Result<f64> {
    let ground = ln_groundstate(&lambda.plus_delta(ell as i32), x)?;
    if ell == 0 {
        return Ok(ground);
    }
    let p = eta_at(lambda, Complex64::new(x, 0.0), 1);
    let den = xi_eval(ell, lambda, &p.eta, &p.one_minus).norm();
    if den < SINGULAR_DENOMINATOR {
        return Err(Error::Singular(format!("|xi_{ell}(eta(x - i gamma/2))| = {den:e} at x = {x}")));
    }
    Ok(ground - den.ln())
}

pub fn psi_ell_eval(ell: usize, lambda: &FloatParams, x: f64) -> Result<f64> {
    Ok(ln_psi_ell(ell, lambda, x)?.exp())
}

/// `P_{ℓ,n}(η(x); λ)` on the real domain, by the terminating series in
/// floating point. The Askey-Wilson series cancels badly for `n ≳ 6` at
/// `q ≲ 1/4`; Horner on `exceptional_poly(..).to_c64()` does not.
pub fn exceptional_at(ell: usize, n: usize, lambda: &FloatParams, x: f64) -> Result<f64> {
    let p = eta_at(lambda, Complex64::new(x, 0.0), 0);
    Ok(exceptional_eval(ell, n, lambda, &p.eta, &p.one_minus)?.re)
}

/// One row of a plotting table.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize)]
pub struct EigenSample {
    pub x: f64,
    pub psi: f64,
    pub poly: f64,
    pub phi: f64,
}

/// `ψ_ℓ`, `P_{ℓ,n}` and `φ_{ℓ,n} = ψ_ℓ P_{ℓ,n}` at the given points.
pub fn sample_eigenfunction(ell: usize, n: usize, lambda: &FloatParams, xs: &[f64]) -> Result<Vec<EigenSample>> {
    xs.iter()
        .map(|&x| {
            let psi = psi_ell_eval(ell, lambda, x)?;
            let poly = exceptional_at(ell, n, lambda, x)?;
            Ok(EigenSample { x, psi, poly, phi: psi * poly })
        })
        .collect()
}
