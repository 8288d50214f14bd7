use super::ParamSet;
use crate::numfield::{pochhammer, q_pochhammer, Scalar};
use crate::polycore::{Family, Poly, Var};

/// The terminating hypergeometric sum behind `P_n`, split into scalar
/// weights `c_k` and the `η`-dependent factors, so that
/// `P_n = Σ_k c_k Π_{j<k} f_j(η)`.
///
/// Every Pochhammer quotient is expanded as `(a)_n/(a)_k = (a+k)_{n−k}`, so
/// nothing is divided by a lower parameter. That matters for the twisted
/// parameters used by the deformations, where `a₁ + a₂` is often a
/// nonpositive integer.
struct TermSum<T> {
    weights: Vec<T>,
    /// `f_j(η) = α_j + β_j η`.
    factors: Vec<(T, T)>,
    /// `c` in the Askey-Wilson factor `(1 − c)² + 2c(1 − η)`.
    aw_c: Vec<T>,
}

fn term_sum<T: Scalar>(n: usize, lambda: &ParamSet<T>) -> TermSum<T> {
    let mut a = lambda.a().clone();
    // the sum singles out one parameter; any works by symmetry, but the
    // Askey-Wilson prefactor divides by it
    if lambda.family() == Family::AskeyWilson {
        if let Some(k) = a.iter().position(|x| !x.is_zero()) {
            a.swap(0, k);
        }
    }
    let a1 = a[0].clone();
    let b = lambda.b();
    let mut weights = Vec::with_capacity(n + 1);
    let mut factors = Vec::with_capacity(n);
    let mut aw_c = Vec::new();
    match lambda.family() {
        Family::Wilson => {
            let mut kfact = T::one();
            for k in 0..=n {
                if k > 0 {
                    kfact = kfact * T::from_i64(k as i64);
                }
                let mut w = pochhammer(&T::from_i64(-(n as i64)), k)
                    * pochhammer(&(T::from_i64(n as i64) + b.clone() - T::one()), k)
                    / kfact.clone();
                for aj in &a[1..] {
                    w = w * pochhammer(&(a1.clone() + aj.clone() + T::from_i64(k as i64)), n - k);
                }
                weights.push(w);
            }
            for j in 0..n {
                let shifted = a1.clone() + T::from_i64(j as i64);
                factors.push((shifted.clone() * shifted, T::one()));
            }
        }
        Family::AskeyWilson => {
            let q = lambda.q();
            let qinv = T::one() / q.clone();
            let prefactor = (T::one() / a1.clone()).powi(n as i32);
            let bq = b * q.powi(n as i32 - 1);
            let mut qk = T::one();
            for k in 0..=n {
                let mut w = q_pochhammer(&qinv.powi(n as i32), &q, k) * q_pochhammer(&bq, &q, k) * qk.clone()
                    / q_pochhammer(&q, &q, k);
                for aj in &a[1..] {
                    w = w * q_pochhammer(&(a1.clone() * aj.clone() * qk.clone()), &q, n - k);
                }
                weights.push(w * prefactor.clone());
                qk = qk * q.clone();
            }
            let mut c = a1.clone();
            for _ in 0..n {
                factors.push((T::one() + c.clone() * c.clone(), -(T::from_i64(2) * c.clone())));
                aw_c.push(c.clone());
                c = c * q.clone();
            }
        }
    }
    TermSum { weights, factors, aw_c }
}

/// `P_n(η; λ)`: the Wilson polynomial `W_n(η; a₁..a₄)` or the Askey-Wilson
/// polynomial `p_n(η; a₁..a₄ | q)`, expanded exactly in powers of `η`.
pub fn classical_poly<T: Scalar>(n: usize, lambda: &ParamSet<T>) -> Poly<T> {
    let ts = term_sum(n, lambda);
    let mut acc = Poly::zero(Var::Eta);
    let mut running = Poly::one(Var::Eta);
    for (k, w) in ts.weights.iter().enumerate() {
        acc = &acc + &running.scale(w);
        if k < n {
            let (alpha, beta) = &ts.factors[k];
            running = &running * &Poly::new(Var::Eta, vec![alpha.clone(), beta.clone()]);
        }
    }
    acc
}

/// `P_n` at a single point, given both `η` and `1 − η`.
///
/// Evaluating the sum directly avoids the cancellation of the monomial
/// expansion near `q → 1`. The Askey-Wilson factors are formed as
/// `(1 − c)² + 2c(1 − η)`, which stays accurate when the caller supplies
/// `1 − η` without subtracting.
pub fn classical_eval<T: Scalar>(n: usize, lambda: &ParamSet<T>, eta: &T, one_minus_eta: &T) -> T {
    let ts = term_sum(n, lambda);
    let mut acc = T::zero();
    let mut running = T::one();
    for (k, w) in ts.weights.iter().enumerate() {
        acc = acc + running.clone() * w.clone();
        if k < n {
            let f = match lambda.family() {
                Family::Wilson => ts.factors[k].0.clone() + eta.clone(),
                Family::AskeyWilson => {
                    let c = &ts.aw_c[k];
                    let d = T::one() - c.clone();
                    d.clone() * d + T::from_i64(2) * c.clone() * one_minus_eta.clone()
                }
            };
            running = running * f;
        }
    }
    acc
}
