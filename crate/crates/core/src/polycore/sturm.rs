use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::Poly;
use crate::error::{Error, Result};
use crate::numfield::{GaussianRational, Rat};

/// End of a counting interval.
#[derive(Clone, Debug, PartialEq)]
pub enum Bound {
    Finite(Rat),
    NegInf,
    PosInf,
}

/// Result of a Sturm count on an open interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmCount {
    /// Distinct real roots strictly inside the interval.
    pub interior: usize,
    /// The polynomial vanishes at the lower endpoint.
    pub root_at_lo: bool,
    /// The polynomial vanishes at the upper endpoint.
    pub root_at_hi: bool,
}

/// Endpoint nudge used when the polynomial vanishes at a finite endpoint.
pub fn endpoint_epsilon() -> Rat {
    Rat::new(BigInt::one(), BigInt::one() << 64)
}

/// `1 + max_k |c_k / c_n|`; every complex root has modulus below it.
pub fn cauchy_bound(coeffs: &[Rat]) -> Rat {
    let n = coeffs.len() - 1;
    let lc = coeffs[n].abs();
    coeffs[..n].iter().map(|c| c.abs() / &lc).max().unwrap_or_else(Rat::zero) + Rat::one()
}

fn real_coeffs(p: &Poly<GaussianRational>) -> Result<Vec<Rat>> {
    if p.is_zero() {
        return Err(Error::Domain("Sturm count of the zero polynomial".into()));
    }
    if !p.coeffs().iter().all(|c| c.im.is_zero()) {
        return Err(Error::Domain("Sturm count needs real coefficients".into()));
    }
    Ok(p.coeffs().iter().map(|c| c.re.clone()).collect())
}

fn trim(mut v: Vec<Rat>) -> Vec<Rat> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn eval(p: &[Rat], x: &Rat) -> Rat {
    p.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
}

fn rem(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let db = b.len() - 1;
    let inv = Rat::one() / &b[db];
    let mut r = a.to_vec();
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let t = r.last().unwrap() * &inv;
        for (j, bc) in b.iter().enumerate() {
            r[k + j] -= &t * bc;
        }
        r.pop();
        r = trim(r);
    }
    r
}

/// Positive rescaling so the leading coefficient has modulus one; signs are
/// unchanged, coefficients stay small.
fn normalize(v: Vec<Rat>) -> Vec<Rat> {
    let lc = v.last().unwrap().abs();
    v.into_iter().map(|c| c / &lc).collect()
}

fn sturm_chain(p: &[Rat]) -> Vec<Vec<Rat>> {
    let dp: Vec<Rat> =
        trim(p.iter().enumerate().skip(1).map(|(k, c)| c * Rat::from_integer(BigInt::from(k))).collect());
    let mut chain = vec![normalize(p.to_vec())];
    if dp.is_empty() {
        return chain;
    }
    chain.push(normalize(dp));
    loop {
        let n = chain.len();
        let r = rem(&chain[n - 2], &chain[n - 1]);
        if r.is_empty() {
            break;
        }
        chain.push(normalize(r.into_iter().map(|c| -c).collect()));
    }
    chain
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

fn sign(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

fn changes_at(chain: &[Vec<Rat>], x: &Rat) -> usize {
    sign_changes(chain.iter().map(|p| sign(&eval(p, x))))
}

/// Distinct real roots of `p` in the open interval `(lo, hi)`.
pub fn sturm_count(p: &Poly<GaussianRational>, lo: Bound, hi: Bound) -> Result<usize> {
    sturm_count_detailed(p, lo, hi).map(|c| c.interior)
}

/// As [`sturm_count`], also reporting roots sitting exactly on a finite
/// endpoint. Such endpoints are moved inward by [`endpoint_epsilon`] before
/// counting; infinite ends are replaced by the Cauchy bound.
pub fn sturm_count_detailed(p: &Poly<GaussianRational>, lo: Bound, hi: Bound) -> Result<SturmCount> {
    let c = real_coeffs(p)?;
    let r = cauchy_bound(&c);
    let resolve = |b: Bound| match b {
        Bound::Finite(v) => (v, true),
        Bound::NegInf => (-r.clone(), false),
        Bound::PosInf => (r.clone(), false),
    };
    let (mut lo, lo_finite) = resolve(lo);
    let (mut hi, hi_finite) = resolve(hi);
    if lo >= hi {
        return Err(Error::Domain(format!("empty interval ({lo}, {hi})")));
    }
    let eps = endpoint_epsilon();
    let root_at_lo = lo_finite && eval(&c, &lo).is_zero();
    if root_at_lo {
        lo += &eps;
    }
    let root_at_hi = hi_finite && eval(&c, &hi).is_zero();
    if root_at_hi {
        hi -= &eps;
    }
    let chain = sturm_chain(&c);
    let interior = changes_at(&chain, &lo).saturating_sub(changes_at(&chain, &hi));
    Ok(SturmCount { interior, root_at_lo, root_at_hi })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::{rat, Scalar};
    use crate::polycore::Var;
    use proptest::prelude::*;

    fn p(cs: &[i64]) -> Poly<GaussianRational> {
        Poly::new(Var::Eta, cs.iter().map(|&c| GaussianRational::from(c)).collect())
    }

    #[test]
    fn basic_counts() {
        let fin = |n, d| Bound::Finite(rat(n, d));
        assert_eq!(sturm_count(&p(&[-1, 0, 1]), fin(0, 1), fin(2, 1)).unwrap(), 1);
        assert_eq!(sturm_count(&p(&[1, 0, 1]), fin(-10, 1), fin(10, 1)).unwrap(), 0);
        assert_eq!(sturm_count(&p(&[-4, -2]), fin(0, 1), Bound::PosInf).unwrap(), 0);
        assert_eq!(sturm_count(&p(&[-4, -2]), Bound::NegInf, Bound::PosInf).unwrap(), 1);
    }

    #[test]
    fn endpoint_roots_reported_separately() {
        // (x)(x-1)(x-2) on (0, 2): only the root at 1 is interior
        let q = &(&p(&[0, 1]) * &p(&[-1, 1])) * &p(&[-2, 1]);
        let c = sturm_count_detailed(&q, Bound::Finite(rat(0, 1)), Bound::Finite(rat(2, 1))).unwrap();
        assert_eq!(c, SturmCount { interior: 1, root_at_lo: true, root_at_hi: true });
    }

    #[test]
    fn repeated_roots_counted_once() {
        let q = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[3, 1]);
        assert_eq!(sturm_count(&q, Bound::NegInf, Bound::PosInf).unwrap(), 2);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(sturm_count(&p(&[]), Bound::NegInf, Bound::PosInf).is_err());
        let complex = Poly::new(Var::Eta, vec![GaussianRational::i(), GaussianRational::from(1)]);
        assert!(sturm_count(&complex, Bound::NegInf, Bound::PosInf).is_err());
        assert!(sturm_count(&p(&[1, 1]), Bound::Finite(rat(1, 1)), Bound::Finite(rat(0, 1))).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        /// Roots on a 1/8 lattice plus an irreducible quadratic factor; an
        /// exhaustive sign scan at 10^4 points must see every root.
        #[test]
        fn agrees_with_sign_scan(
            roots in proptest::collection::btree_set(-40i64..40, 0..6),
            quad in 1i64..5,
        ) {
            let mut q = p(&[quad, 0, 1]);
            for r in &roots {
                q = &q * &Poly::new(Var::Eta, vec![GaussianRational::ratio(-r, 8), GaussianRational::from(1)]);
            }
            let lo = rat(-81, 16);
            let hi = rat(81, 16);
            let count = sturm_count(&q, Bound::Finite(lo.clone()), Bound::Finite(hi.clone())).unwrap();
            let c = real_coeffs(&q).unwrap();
            let steps = 10_000i64;
            let mut changes = 0;
            let mut prev = sign(&eval(&c, &lo));
            for k in 1..=steps {
                let x = &lo + (&hi - &lo) * rat(k, steps);
                let s = sign(&eval(&c, &x));
                if s == 0 {
                    changes += 1;
                    prev = 0;
                } else {
                    if prev != 0 && s != prev {
                        changes += 1;
                    }
                    prev = s;
                }
            }
            prop_assert_eq!(count, roots.len());
            prop_assert_eq!(count, changes);
        }
    }
}
