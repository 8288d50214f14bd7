//! Pointwise evaluation of the sinusoidal coordinate, potentials and the
//! deformed potential in floating point.

use num_complex::Complex;

use crate::classical::ParamSet;
use crate::error::{Error, Result};
use crate::exceptional::xi_eval;
use crate::numfield::FloatReal;
use crate::polycore::Family;

pub(crate) fn real<F: FloatReal>(v: f64) -> F {
    F::from(v).expect("f64 is representable")
}

/// `e^t − 1` without cancellation for small `|t|`.
pub fn expm1_complex<F: FloatReal>(t: Complex<F>) -> Complex<F> {
    let half = real::<F>(0.5);
    let sin_half = (t.im * half).sin();
    let re = t.re.exp_m1() * t.im.cos() - real::<F>(2.0) * sin_half * sin_half;
    Complex::new(re, t.re.exp() * t.im.sin())
}

/// `η` and `1 − η` at a shifted point.
#[derive(Clone, Copy, Debug)]
pub struct EtaPoint<F> {
    pub eta: Complex<F>,
    pub one_minus: Complex<F>,
}

/// `η(x − ikγ/2)` together with `1 − η`. For Askey-Wilson, `1 − η` is formed
/// as `−(w − 1)²/(2w)` with `w = z s^k`, which keeps full relative accuracy
/// near `x → 0` and `s → 1`.
pub fn eta_at<F: FloatReal>(lambda: &ParamSet<Complex<F>>, x: Complex<F>, k: i32) -> EtaPoint<F> {
    let kf = real::<F>(k as f64);
    match lambda.family() {
        Family::Wilson => {
            let y = Complex::new(x.re, x.im - kf * real(0.5));
            let eta = y * y;
            EtaPoint { eta, one_minus: Complex::new(F::one(), F::zero()) - eta }
        }
        Family::AskeyWilson => {
            let t = Complex::new(-x.im + kf * lambda.s().re.ln(), x.re);
            let wm1 = expm1_complex(t);
            let w = wm1 + F::one();
            let eta = (w + w.inv()) * real::<F>(0.5);
            EtaPoint { eta, one_minus: -(wm1 * wm1) / (w * real::<F>(2.0)) }
        }
    }
}

/// `V(x; λ)` at a complex point.
pub fn potential_eval<F: FloatReal>(lambda: &ParamSet<Complex<F>>, x: Complex<F>) -> Complex<F> {
    let one = Complex::new(F::one(), F::zero());
    let i = Complex::new(F::zero(), F::one());
    match lambda.family() {
        Family::Wilson => {
            let num = lambda.a().iter().fold(one, |acc, a| acc * (a + i * x));
            let two_ix = i * x * real::<F>(2.0);
            num / (two_ix * (two_ix + one))
        }
        Family::AskeyWilson => {
            let z = (i * x).exp();
            let num = lambda.a().iter().fold(one, |acc, a| acc * (one - a * z));
            num / ((one - z * z) * (one - lambda.q() * z * z))
        }
    }
}

/// `V_ℓ(x; λ)` at a complex point, from its product form.
pub fn deformed_potential_eval<F: FloatReal>(
    ell: usize,
    lambda: &ParamSet<Complex<F>>,
    x: Complex<F>,
) -> Result<Complex<F>> {
    let base = potential_eval(&lambda.plus_delta(ell as i32), x);
    if ell == 0 {
        return Ok(base);
    }
    let next = lambda.plus_delta(1);
    let xi = |mu: &ParamSet<Complex<F>>, k: i32| {
        let p = eta_at(lambda, x, k);
        xi_eval(ell, mu, &p.eta, &p.one_minus)
    };
    let den = xi(lambda, 1) * xi(&next, 0);
    if den.norm() == F::zero() {
        return Err(Error::Singular(format!("xi_{ell} vanishes at x = {x:?}")));
    }
    Ok(base * xi(lambda, -1) * xi(&next, 2) / den)
}

/// `V*(x) = conj(V(conj x))`.
pub fn conjugate_at<F: FloatReal>(f: impl Fn(Complex<F>) -> Result<Complex<F>>, x: Complex<F>) -> Result<Complex<F>> {
    Ok(f(x.conj())?.conj())
}
