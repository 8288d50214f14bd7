use crate::classical::ParamSet;
use crate::error::{Error, Result};
use crate::numfield::Scalar;
use crate::polycore::Family;

/// The three scalar coefficients `a_{ℓ,n,1}`, `a_{ℓ,n,2}`, `b_{ℓ,n,1}` of
/// `P_{ℓ,n}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExceptionalCoeffs<T> {
    pub a1: T,
    pub a2: T,
    pub b1: T,
}

impl<T: Scalar> ExceptionalCoeffs<T> {
    fn zero() -> Self {
        Self { a1: T::zero(), a2: T::zero(), b1: T::zero() }
    }

    pub fn is_real(&self) -> bool {
        self.a1.is_real() && self.a2.is_real() && self.b1.is_real()
    }
}

fn nonzero<T: Scalar>(x: T, what: &str, lambda: &ParamSet<T>) -> Result<T> {
    if x.is_zero() {
        Err(Error::Degenerate(format!("{what} vanishes at {lambda:?}")))
    } else {
        Ok(x)
    }
}

/// Closed-form coefficients. Both vanish identically at `n = 0` and for
/// `ℓ = 0`, where no denominator is evaluated; otherwise a vanishing
/// denominator is a [`Error::Degenerate`].
pub fn exceptional_coeffs<T: Scalar>(ell: usize, n: usize, lambda: &ParamSet<T>) -> Result<ExceptionalCoeffs<T>> {
    if ell == 0 || n == 0 {
        return Ok(ExceptionalCoeffs::zero());
    }
    match lambda.family() {
        Family::Wilson => wilson(ell as i64, n as i64, lambda),
        Family::AskeyWilson => askey_wilson(ell as i64, n as i64, lambda),
    }
}

fn wilson<T: Scalar>(l: i64, n: i64, lambda: &ParamSet<T>) -> Result<ExceptionalCoeffs<T>> {
    let a = lambda.a();
    let t = |x: i64| T::from_i64(x);
    let half_n = T::ratio(n, 2);
    let sa = a[0].clone() + a[1].clone();
    let sb = a[2].clone() + a[3].clone();
    let diff = nonzero(sa.clone() - sb.clone() - t(2 * (l - 1)), "a1+a2-a3-a4-2(l-1)", lambda)?;
    let total = nonzero(sa.clone() + sb.clone() + t(2 * (n + l - 1)), "a1+a2+a3+a4+2(n+l-1)", lambda)?;
    let san = nonzero(sa.clone() + t(n), "a1+a2+n", lambda)?;
    let sq = |x: T| x.clone() * x;
    let squares = sq(a[0].clone() + half_n.clone()) + sq(a[1].clone() + half_n.clone())
        - sq(a[2].clone() + half_n.clone() + t(l - 1))
        - sq(a[3].clone() + half_n + t(l - 1));
    let skew = sa.clone() - sb.clone() - t(l - 1);
    let a1 = t(l * n) * skew.clone() / (diff.clone() * total.clone()) * squares;

    let mut cross_diff = T::one();
    let mut cross_sum = T::one();
    for j in 0..2 {
        for k in 2..4 {
            cross_diff = cross_diff * (a[j].clone() - a[k].clone() - t(l - 1));
            cross_sum = cross_sum * (a[j].clone() + a[k].clone() + t(n + l - 1));
        }
    }
    let a2 = cross_diff * t(l * (l - 1) * n) * (sb + t(2 * (l - 1))) / (san.clone() * diff);
    let b1 = -(cross_sum * t(l * n) * (sa + t(n + l - 1)) * skew / (san * total));
    Ok(ExceptionalCoeffs { a1, a2, b1 })
}

fn askey_wilson<T: Scalar>(l: i64, n: i64, lambda: &ParamSet<T>) -> Result<ExceptionalCoeffs<T>> {
    let a = lambda.a();
    let q = lambda.q();
    let qp = |k: i64| q.powi(k as i32);
    let one = T::one();
    let pa = nonzero(a[0].clone() * a[1].clone(), "a1 a2", lambda)?;
    let pb = a[2].clone() * a[3].clone();
    let b = pa.clone() * pb.clone();
    let ratio = pb.clone() / pa.clone();

    let d_ratio = nonzero(one.clone() - ratio.clone() * qp(2 * (l - 1)), "1-a3a4q^{2(l-1)}/(a1a2)", lambda)?;
    let d_total = nonzero(one.clone() - b * qp(2 * (n + l - 1)), "1-a1a2a3a4q^{2(n+l-1)}", lambda)?;
    let d_pair = nonzero(one.clone() - pa.clone() * qp(n), "1-a1a2q^n", lambda)?;

    // (… − (1/a₃ + 1/a₄)) a₃a₄ written without dividing by a₃, a₄
    let bracket = (qp(n + l - 1) * (a[0].clone() + a[1].clone()) - qp(n + 2 * (l - 1)) * (a[2].clone() + a[3].clone())
        + qp(l - 1) * (one.clone() / a[0].clone() + one.clone() / a[1].clone()))
        * pb.clone()
        - (a[2].clone() + a[3].clone());
    let a1 = bracket
        * lambda.s().powi(l as i32 - 2)
        * (one.clone() - qp(l))
        * (one.clone() - qp(n))
        * (one.clone() - ratio.clone() * qp(l - 1))
        / (d_ratio.clone() * d_total.clone());

    let mut cross_ratio = one.clone();
    let mut cross_prod = one.clone();
    for j in 0..2 {
        for k in 2..4 {
            cross_ratio = cross_ratio * (one.clone() - a[k].clone() / a[j].clone() * qp(l - 1));
            cross_prod = cross_prod * (one.clone() - a[j].clone() * a[k].clone() * qp(n + l - 1));
        }
    }
    let a2 = -(cross_ratio
        * (qp(-l) - one.clone())
        * (one.clone() - qp(l - 1))
        * (one.clone() - qp(n))
        * (one.clone() - pb * qp(2 * (l - 1)))
        / (d_pair.clone() * d_ratio));
    let b1 = (qp(-l) - one.clone())
        * (one.clone() - qp(n))
        * cross_prod
        * (one.clone() - pa * qp(n + l - 1))
        * (one - ratio * qp(l - 1))
        / (d_pair * d_total);
    Ok(ExceptionalCoeffs { a1, a2, b1 })
}
