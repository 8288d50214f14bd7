//! Zero counting: the argument principle on the hermiticity rectangle,
//! a companion-matrix cross-check, and exact real-zero counts.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::points::eta_at;
use crate::error::{Error, Result};
use crate::exceptional::{exceptional_poly, xi_poly};
use crate::numfield::{rat, Rat, RealScalar, Scalar};
use crate::polycore::{cauchy_bound, sturm_count, Bound, Family, Poly};
use crate::{ExactParams, FloatParams};

/// Bisection depth before an edge step is declared unresolved.
const MAX_DEPTH: u32 = 24;
/// Initial steps per edge.
const EDGE_STEPS: usize = 64;
/// `|f|` below this fraction of its termwise magnitude counts as a zero on
/// the contour.
const CONTOUR_ZERO: f64 = 1e-12;
/// Outward perturbations tried when a zero sits on the contour.
const RETRIES: u32 = 3;

/// `x₁ ≤ Re x ≤ x₂`, `|Im x| ≤ h` with `h = |γ|/2`.
///
/// Wilson uses the symmetric strip `[−X, X]` (with `X` past every zero of
/// `ξ_ℓ∘η`), so that zeros on the imaginary axis are interior and each zero
/// `x` is counted together with `−x`. Askey-Wilson uses one period
/// `[−π, π]`; by periodicity only the horizontal edges contribute.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize)]
pub struct RectangleDomain {
    pub re: (f64, f64),
    pub im_half: f64,
    pub periodic: bool,
}

impl RectangleDomain {
    pub fn contains(&self, x: Complex64, slack: f64) -> bool {
        x.im.abs() <= self.im_half + slack
            && (self.periodic || (x.re >= self.re.0 - slack && x.re <= self.re.1 + slack))
    }

    fn widened(&self, eps: f64) -> Self {
        Self { im_half: self.im_half * (1.0 + eps), ..*self }
    }
}

/// Zeros of `ξ_ℓ(η(x); λ)` and `ξ_ℓ(η(x); λ+δ)` in the closed rectangle.
#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct RectangleReport {
    pub domain: RectangleDomain,
    /// `None` when the argument principle stayed inconclusive.
    pub count: Option<usize>,
    pub retries: u32,
}

impl RectangleReport {
    pub fn zero_free(&self) -> Option<bool> {
        self.count.map(|c| c == 0)
    }
}

/// The hermiticity rectangle for `ξ_ℓ(·; λ)` and `ξ_ℓ(·; λ+δ)`.
pub fn rectangle_domain(ell: usize, lambda: &ExactParams) -> Result<RectangleDomain> {
    match lambda.family() {
        Family::Wilson => {
            let mut reach = Rat::from_integer(1.into());
            for mu in [lambda.clone(), lambda.plus_delta(1)] {
                let xi = xi_poly(ell, &mu);
                let c: Vec<Rat> = xi.coeffs().iter().map(|c| c.re.clone()).collect();
                if xi.coeffs().iter().any(|c| !c.is_real()) {
                    return Err(Error::InvalidParams("xi has non-real coefficients".into()));
                }
                if c.len() > 1 {
                    reach = reach.max(cauchy_bound(&c));
                }
            }
            // |η(x)| ≥ (Re x)², so Re x beyond √B + 1 is zero-free
            let x = reach.as_f64().sqrt() + 1.0;
            Ok(RectangleDomain { re: (-x, x), im_half: 0.5, periodic: false })
        }
        Family::AskeyWilson => {
            let s = lambda.s().to_c64().re;
            Ok(RectangleDomain { re: (-PI, PI), im_half: -s.ln(), periodic: true })
        }
    }
}

/// `Σ |c_k| |η|^k`, the scale against which `|ξ(η)|` is judged.
fn termwise(p: &Poly<Complex64>, eta: Complex64) -> f64 {
    let r = eta.norm();
    p.coeffs().iter().rev().fold(0.0, |acc, c| acc * r + c.norm())
}

enum Winding {
    Turns(f64),
    OnContour,
    Unresolved,
}

/// Change of `arg ξ(η(x))` along the segment from `a` to `b`.
fn edge_winding(p: &Poly<Complex64>, lambda: &FloatParams, a: Complex64, b: Complex64) -> Winding {
    let at = |t: f64| {
        let x = a + (b - a) * t;
        let e = eta_at(lambda, x, 0);
        let v = p.eval(&e.eta);
        (v, v.norm() < CONTOUR_ZERO * termwise(p, e.eta))
    };
    let mut total = 0.0;
    let mut stack: Vec<(f64, f64, Complex64, Complex64, u32)> = Vec::new();
    let (mut prev, hit) = at(0.0);
    if hit {
        return Winding::OnContour;
    }
    for k in 0..EDGE_STEPS {
        let t0 = k as f64 / EDGE_STEPS as f64;
        let t1 = (k + 1) as f64 / EDGE_STEPS as f64;
        let (next, hit) = at(t1);
        if hit {
            return Winding::OnContour;
        }
        stack.push((t0, t1, prev, next, 0));
        while let Some((u0, u1, f0, f1, depth)) = stack.pop() {
            let d = (f1 / f0).arg();
            if d.abs() < FRAC_PI_2 {
                total += d;
                continue;
            }
            if depth >= MAX_DEPTH {
                return Winding::Unresolved;
            }
            let mid = 0.5 * (u0 + u1);
            let (fm, hit) = at(mid);
            if hit {
                return Winding::OnContour;
            }
            // right half first so the left half is popped next
            stack.push((mid, u1, fm, f1, depth + 1));
            stack.push((u0, mid, f0, fm, depth + 1));
        }
        prev = next;
    }
    Winding::Turns(total)
}

/// Zeros of `ξ(η(x))` inside `domain`, counterclockwise argument principle.
fn count_in(p: &Poly<Complex64>, lambda: &FloatParams, domain: &RectangleDomain) -> Winding {
    let (x0, x1) = domain.re;
    let h = domain.im_half;
    let c = |re: f64, im: f64| Complex64::new(re, im);
    let edges: Vec<(Complex64, Complex64)> = if domain.periodic {
        vec![(c(x0, -h), c(x1, -h)), (c(x1, h), c(x0, h))]
    } else {
        vec![(c(x0, -h), c(x1, -h)), (c(x1, -h), c(x1, h)), (c(x1, h), c(x0, h)), (c(x0, h), c(x0, -h))]
    };
    let mut total = 0.0;
    for (a, b) in edges {
        match edge_winding(p, lambda, a, b) {
            Winding::Turns(t) => total += t,
            other => return other,
        }
    }
    Winding::Turns(total / TAU)
}

/// Argument-principle count of the zeros of `ξ_ℓ(η(x); λ)` and
/// `ξ_ℓ(η(x); λ+δ)` in the closed hermiticity rectangle. A zero on the
/// contour is retried with the strip widened outward, which counts it as
/// inside; `count` is `None` if that does not settle it.
pub fn zero_free_rectangle(ell: usize, lambda: &ExactParams) -> Result<RectangleReport> {
    let domain = rectangle_domain(ell, lambda)?;
    let float = lambda.to_c64();
    let polys = [xi_poly(ell, lambda).to_c64(), xi_poly(ell, &lambda.plus_delta(1)).to_c64()];
    for retries in 0..=RETRIES {
        let trial = domain.widened(1e-9 * retries as f64);
        let mut count = 0.0;
        let mut settled = true;
        for p in &polys {
            match count_in(p, &float, &trial) {
                Winding::Turns(t) => count += t,
                Winding::OnContour => {
                    settled = false;
                    break;
                }
                Winding::Unresolved => return Ok(RectangleReport { domain, count: None, retries }),
            }
        }
        if settled {
            let rounded = count.round();
            if (count - rounded).abs() > 0.1 || rounded < 0.0 {
                return Ok(RectangleReport { domain, count: None, retries });
            }
            return Ok(RectangleReport { domain, count: Some(rounded as usize), retries });
        }
    }
    Ok(RectangleReport { domain, count: None, retries: RETRIES })
}

/// Roots of a polynomial from the eigenvalues of its companion matrix.
pub fn polynomial_roots(p: &Poly<Complex64>) -> Vec<Complex64> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    if deg == 0 {
        return Vec::new();
    }
    let lc = p.coeff(deg);
    let mut m = DMatrix::<Complex64>::zeros(deg, deg);
    for k in 1..deg {
        m[(k, k - 1)] = Complex64::new(1.0, 0.0);
    }
    for k in 0..deg {
        m[(k, deg - 1)] = -p.coeff(k) / lc;
    }
    m.schur().eigenvalues().map(|v| v.iter().copied().collect()).unwrap_or_default()
}

/// The `x` preimages of a value of `η`: `±√η` (Wilson) or the principal
/// `±arccos η` (Askey-Wilson).
fn preimages(family: Family, eta: Complex64) -> [Complex64; 2] {
    let x = match family {
        Family::Wilson => eta.sqrt(),
        Family::AskeyWilson => eta.acos(),
    };
    [x, -x]
}

/// The same count as [`zero_free_rectangle`], from companion-matrix roots in
/// `η` mapped back to `x` and filtered to the rectangle.
pub fn companion_count(ell: usize, lambda: &ExactParams, slack: f64) -> Result<usize> {
    let domain = rectangle_domain(ell, lambda)?;
    let mut count = 0;
    for mu in [lambda.clone(), lambda.plus_delta(1)] {
        for eta in polynomial_roots(&xi_poly(ell, &mu).to_c64()) {
            count += preimages(lambda.family(), eta).iter().filter(|x| domain.contains(**x, slack)).count();
        }
    }
    Ok(count)
}

/// Distinct zeros of `P_{ℓ,n}(η)` with `x` in the open domain, by an exact
/// Sturm count over `η ∈ (0, ∞)` (Wilson) or `η ∈ (−1, 1)` (Askey-Wilson).
pub fn count_real_zeros(ell: usize, n: usize, lambda: &ExactParams) -> Result<usize> {
    let p = exceptional_poly(ell, n, lambda)?;
    let (lo, hi) = match lambda.family() {
        Family::Wilson => (Bound::Finite(rat(0, 1)), Bound::PosInf),
        Family::AskeyWilson => (Bound::Finite(rat(-1, 1)), Bound::Finite(rat(1, 1))),
    };
    sturm_count(&p, lo, hi)
}
