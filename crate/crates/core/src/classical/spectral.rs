use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ParamSet;
use crate::analysis::special::{ln_gamma, qpoch_inf};
use crate::numfield::{pochhammer, q_pochhammer, GaussianRational, Rat, Scalar};
use crate::polycore::Family;

impl<T: Scalar> ParamSet<T> {
    /// `E_n`: `n(n + b − 1)` or `(q^{−n} − 1)(1 − b q^{n−1})`.
    pub fn energy(&self, n: usize) -> T {
        let b = self.b();
        match self.family() {
            Family::Wilson => {
                let n = T::from_i64(n as i64);
                n.clone() * (n + b - T::one())
            }
            Family::AskeyWilson => {
                let q = self.q();
                (q.powi(-(n as i32)) - T::one()) * (T::one() - b * q.powi(n as i32 - 1))
            }
        }
    }

    /// `f_n` with `F P_n(λ) = f_n P_{n−1}(λ + δ)`.
    pub fn forward_coeff(&self, n: usize) -> T {
        match self.family() {
            Family::Wilson => -self.energy(n),
            Family::AskeyWilson => self.s().powi(n as i32) * self.energy(n),
        }
    }

    /// `b_n` with `B P_n(λ + δ) = b_n P_{n+1}(λ)`.
    pub fn backward_coeff(&self, n: usize) -> T {
        match self.family() {
            Family::Wilson => -T::one(),
            Family::AskeyWilson => self.s().powi(-(n as i32 + 1)),
        }
    }
}

/// A squared norm `h_n`.
#[derive(Clone, Debug, PartialEq)]
pub enum NormValue {
    /// `r · π` with `r` exact.
    PiTimes(Rat),
    Numeric(f64),
}

impl NormValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            NormValue::PiTimes(r) => r.to_f64().unwrap_or(f64::NAN) * PI,
            NormValue::Numeric(v) => *v,
        }
    }
}

fn positive_integer(g: &GaussianRational) -> Option<u64> {
    (g.im.is_zero() && g.re.is_integer() && g.re.is_positive()).then(|| g.re.to_integer().to_u64()).flatten()
}

fn factorial(m: u64) -> Rat {
    (1..=m).fold(Rat::one(), |acc, k| acc * Rat::from_integer(k.into()))
}

fn pair_products<T: Scalar>(a: &[T; 4]) -> Vec<T> {
    let mut out = Vec::with_capacity(6);
    for j in 0..4 {
        for k in j + 1..4 {
            out.push(a[j].clone() * a[k].clone());
        }
    }
    out
}

fn pair_sums<T: Scalar>(a: &[T; 4]) -> Vec<T> {
    let mut out = Vec::with_capacity(6);
    for j in 0..4 {
        for k in j + 1..4 {
            out.push(a[j].clone() + a[k].clone());
        }
    }
    out
}

/// `h_n(λ)`, the squared norm of `P_n` against `φ₀²`.
///
/// For Wilson parameters whose Gamma arguments `n + a_j + a_k` and `2n + b`
/// are all positive integers the result is an exact rational multiple of
/// `π`; otherwise it is evaluated in double precision.
pub fn norm_h(n: usize, lambda: &ParamSet<GaussianRational>) -> NormValue {
    if lambda.family() == Family::Wilson {
        let nn = GaussianRational::from(n as i64);
        let b = lambda.b();
        let gammas: Option<Vec<u64>> =
            pair_sums(lambda.a()).iter().map(|s| positive_integer(&(s.clone() + nn.clone()))).collect();
        let top = positive_integer(&(GaussianRational::from(2 * n as i64) + b.clone()));
        if let (Some(gammas), Some(top)) = (gammas, top) {
            let rising = pochhammer(&(nn.clone() + b - GaussianRational::one()), n);
            if rising.im.is_zero() {
                let mut r = Rat::from_integer(2.into()) * factorial(n as u64) * rising.re / factorial(top - 1);
                for g in gammas {
                    r *= factorial(g - 1);
                }
                return NormValue::PiTimes(r);
            }
        }
    }
    NormValue::Numeric(norm_h_numeric(n, &lambda.to_c64()))
}

/// `h_n(λ)` in double precision.
pub fn norm_h_numeric(n: usize, lambda: &ParamSet<Complex64>) -> f64 {
    let nf = n as f64;
    let b = lambda.b();
    match lambda.family() {
        Family::Wilson => {
            let mut lg = -ln_gamma(b + 2.0 * nf);
            for s in pair_sums(lambda.a()) {
                lg += ln_gamma(s + nf);
            }
            let fact: f64 = (1..=n).map(|k| k as f64).product();
            let rising = pochhammer(&(b + nf - 1.0), n);
            (2.0 * PI * fact * rising * lg.exp()).re
        }
        Family::AskeyWilson => {
            let q = lambda.q().re;
            let qn = q.powi(n as i32);
            let mut den = qpoch_inf(Complex64::new(qn * q, 0.0), q);
            for p in pair_products(lambda.a()) {
                den *= qpoch_inf(p * qn, q);
            }
            let qc = Complex64::new(q, 0.0);
            let num = q_pochhammer(&(b * q.powi(n as i32 - 1)), &qc, n) * qpoch_inf(b * qn * qn, q);
            (2.0 * PI * num / den).re
        }
    }
}
