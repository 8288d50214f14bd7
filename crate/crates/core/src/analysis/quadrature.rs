//! Double-exponential quadrature of the orthogonality integrals.

use std::cell::Cell;

use num_complex::Complex64;

use super::points::eta_at;
use super::weight::{domain, ln_psi_ell};
use crate::error::{Error, Result};
use crate::exceptional::{exceptional_poly, norm_h_ell};
use crate::polycore::Family;
use crate::report::{Residual, Status, Timer, VerificationReport};
use crate::{ExactParams, FloatParams, FloatPoly};

/// Lower cut-off of the Wilson half line; the integrand vanishes like `x²`.
const WILSON_LOWER: f64 = 1e-8;

#[derive(Clone, Copy, Debug)]
pub struct QuadratureConfig {
    /// Target error relative to the integral's natural scale.
    pub tol: f64,
    /// Each level halves every panel; `2^max_levels` panels at most.
    pub max_levels: u32,
    /// The Wilson half line is cut where the integrand drops below this
    /// fraction of its peak.
    pub tail: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self { tol: 1e-10, max_levels: 8, tail: 1e-16 }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if self.tol > 0.0 && self.tail > 0.0 && self.tail < 1.0 {
            Ok(())
        } else {
            Err(Error::InvalidParams(format!("bad quadrature settings {self:?}")))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Integral {
    pub value: f64,
    pub error: f64,
}

/// Composite tanh-sinh rule on `[a, b]`, refined by panel bisection until
/// the summed error estimate is below `tol · scale`. The scale defaults to
/// the magnitude of the first estimate. A non-finite integrand value
/// anywhere is an error.
pub fn integrate(
    f: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    cfg: &QuadratureConfig,
    scale: Option<f64>,
) -> Result<Integral> {
    let bad = Cell::new(None);
    let f = |x: f64| {
        let v = f(x);
        if !v.is_finite() && bad.get().is_none() {
            bad.set(Some(x));
        }
        v
    };
    let result = integrate_finite(&f, a, b, cfg, scale);
    match bad.get() {
        Some(x) => Err(Error::Singular(format!("integrand is not finite at x = {x}"))),
        None => result,
    }
}

fn integrate_finite(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    cfg: &QuadratureConfig,
    scale: Option<f64>,
) -> Result<Integral> {
    let scale = match scale {
        Some(s) => s,
        None => quadrature::double_exponential::integrate(f, a, b, 0.0).integral.abs(),
    };
    let target = cfg.tol * scale;
    let mut last = Integral { value: f64::NAN, error: f64::INFINITY };
    for level in 0..=cfg.max_levels {
        let panels = 1u32 << level;
        let width = (b - a) / panels as f64;
        let mut value = 0.0;
        let mut error = 0.0;
        for k in 0..panels {
            let lo = a + width * k as f64;
            let out = quadrature::double_exponential::integrate(f, lo, lo + width, target / panels as f64);
            value += out.integral;
            error += out.error_estimate;
        }
        last = Integral { value, error };
        if error <= target {
            return Ok(last);
        }
    }
    Err(Error::Quadrature { estimate: last.value, error: last.error })
}

/// `P_{ℓ,n}` for each `n`, as the exact η-coefficients rounded to double
/// precision. Summing the terminating q-series in floating point loses
/// every digit by `n ≈ 6` at `q = 1/4`; Horner on these coefficients does
/// not.
fn float_polys(ell: usize, ns: &[usize], lambda: &ExactParams) -> Result<Vec<FloatPoly>> {
    ns.iter().map(|&n| Ok(exceptional_poly(ell, n, lambda)?.to_c64())).collect()
}

fn poly_at(p: &FloatPoly, lambda: &FloatParams, x: f64) -> f64 {
    p.eval(&eta_at(lambda, Complex64::new(x, 0.0), 0).eta).re
}

/// The integration interval: `(0, π)`, or the Wilson half line cut at `X`
/// found by doubling until the diagonal integrands have decayed by `tail`.
fn interval(ell: usize, polys: &[FloatPoly], lambda: &FloatParams, cfg: &QuadratureConfig) -> Result<(f64, f64)> {
    let (lo, hi) = domain(lambda);
    if lambda.family() == Family::AskeyWilson {
        return Ok((lo, hi));
    }
    let envelope = |x: f64| -> Result<f64> {
        let lw = 2.0 * ln_psi_ell(ell, lambda, x)?;
        Ok(polys.iter().map(|p| (lw + 2.0 * poly_at(p, lambda, x).abs().ln()).exp()).fold(0.0, f64::max))
    };
    let mut x_max = 4.0;
    loop {
        let samples = 400;
        let mut peak: f64 = 0.0;
        for k in 1..=samples {
            peak = peak.max(envelope(x_max * k as f64 / samples as f64)?);
        }
        let edge = envelope(x_max)?.max(envelope(0.75 * x_max)?);
        if edge < cfg.tail * peak {
            return Ok((WILSON_LOWER, x_max));
        }
        if x_max > 1e4 {
            return Err(Error::Quadrature { estimate: peak, error: edge });
        }
        x_max *= 2.0;
    }
}

fn weighted_product<'a>(
    ell: usize,
    p: &'a FloatPoly,
    r: &'a FloatPoly,
    lambda: &'a FloatParams,
) -> impl Fn(f64) -> f64 + 'a {
    let (lo, hi) = domain(lambda);
    move |x| {
        // nodes rounded onto an endpoint, where the weight vanishes
        if x <= lo || x >= hi {
            return 0.0;
        }
        match ln_psi_ell(ell, lambda, x) {
            Ok(l) => (2.0 * l).exp() * poly_at(p, lambda, x) * poly_at(r, lambda, x),
            Err(_) => f64::NAN,
        }
    }
}

/// `∫ ψ_ℓ² P_{ℓ,n} P_{ℓ,m} dx` over the domain.
pub fn orthogonality_integral(
    ell: usize,
    n: usize,
    m: usize,
    lambda: &ExactParams,
    cfg: &QuadratureConfig,
) -> Result<Integral> {
    cfg.validate()?;
    let float = lambda.to_c64();
    let polys = float_polys(ell, &[n, m], lambda)?;
    let (a, b) = interval(ell, &polys, &float, cfg)?;
    let (pn, pm) = (&polys[0], &polys[1]);
    let scale = if n == m {
        None
    } else {
        let d1 = integrate(weighted_product(ell, pn, pn, &float), a, b, cfg, None)?;
        let d2 = integrate(weighted_product(ell, pm, pm, &float), a, b, cfg, None)?;
        Some((d1.value * d2.value).abs().sqrt())
    };
    integrate(weighted_product(ell, pn, pm, &float), a, b, cfg, scale)
}

/// The `(N+1)×(N+1)` Gram matrix of `P_{ℓ,0..=N}`.
pub fn gram_matrix(ell: usize, max_n: usize, lambda: &ExactParams, cfg: &QuadratureConfig) -> Result<Vec<Vec<f64>>> {
    cfg.validate()?;
    let float = lambda.to_c64();
    let ns: Vec<usize> = (0..=max_n).collect();
    let polys = float_polys(ell, &ns, lambda)?;
    let (a, b) = interval(ell, &polys, &float, cfg)?;
    let diag = polys
        .iter()
        .map(|p| integrate(weighted_product(ell, p, p, &float), a, b, cfg, None).map(|i| i.value))
        .collect::<Result<Vec<f64>>>()?;
    let mut g = vec![vec![0.0; ns.len()]; ns.len()];
    for n in 0..=max_n {
        g[n][n] = diag[n];
        for m in n + 1..=max_n {
            let scale = (diag[n] * diag[m]).abs().sqrt();
            let v = integrate(weighted_product(ell, &polys[n], &polys[m], &float), a, b, cfg, Some(scale))?.value;
            g[n][m] = v;
            g[m][n] = v;
        }
    }
    Ok(g)
}

/// Gram matrix against `h_{ℓ,n} δ_{nm}`: the largest relative deviation on
/// the diagonal and off it (scaled by `√(h_n h_m)`), both within `accept`.
pub fn check_orthogonality(
    ell: usize,
    max_n: usize,
    lambda: &ExactParams,
    cfg: &QuadratureConfig,
    accept: f64,
) -> Result<VerificationReport> {
    let timer = Timer::start();
    let g = gram_matrix(ell, max_n, lambda, cfg)?;
    let h: Vec<f64> = (0..=max_n).map(|n| norm_h_ell(ell, n, lambda).to_f64()).collect();
    let mut worst_diag: f64 = 0.0;
    let mut worst_off: f64 = 0.0;
    for n in 0..=max_n {
        worst_diag = worst_diag.max(((g[n][n] - h[n]) / h[n]).abs());
        for m in 0..n {
            worst_off = worst_off.max(g[n][m].abs() / (h[n] * h[m]).sqrt());
        }
    }
    let worst = worst_diag.max(worst_off);
    let mut params = lambda.summary();
    params["ell"] = ell.into();
    params["max_n"] = max_n.into();
    let status = if worst <= accept { Status::Pass } else { Status::Fail };
    Ok(timer
        .finish("orthogonality", params, status, Some(Residual::Numeric { value: worst }))
        .with_detail(format!("diagonal {worst_diag:.3e}, off-diagonal {worst_off:.3e}")))
}
