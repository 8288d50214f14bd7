//! Exact polynomial kernel: dense polynomials, Laurent polynomials in
//! `z = e^{ix}`, rational functions, the substitutions induced by imaginary
//! shifts of `x`, and Sturm-sequence root counting.

mod gcd;
mod laurent;
mod poly;
mod ratfunc;
mod sturm;

use serde::{Deserialize, Serialize};

pub use gcd::poly_gcd;
pub use laurent::LaurentPoly;
pub use poly::{Poly, Var};
pub use ratfunc::RatFunc;
pub use sturm::{cauchy_bound, endpoint_epsilon, sturm_count, sturm_count_detailed, Bound, SturmCount};

use crate::error::Result;
use crate::numfield::Scalar;

/// Which of the two orthogonal families a computation lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `η(x) = x²` on `0 < x < ∞`, shift `γ = 1`.
    Wilson,
    /// `η(x) = cos x` on `0 < x < π`, shift `γ = log q`.
    AskeyWilson,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Wilson => "wilson",
            Family::AskeyWilson => "aw",
        }
    }
}

/// Image of a polynomial in `η` under the sinusoidal coordinate.
#[derive(Clone, PartialEq)]
pub enum EtaImage<T> {
    /// Wilson: a polynomial in `x`.
    X(Poly<T>),
    /// Askey-Wilson: a symmetric Laurent polynomial in `z`.
    Z(LaurentPoly<T>),
}

impl<T: Scalar> std::fmt::Debug for EtaImage<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EtaImage::X(p) => write!(f, "X({p:?})"),
            EtaImage::Z(l) => write!(f, "Z({l:?})"),
        }
    }
}

impl<T: Scalar> EtaImage<T> {
    pub fn to_ratfunc(&self) -> RatFunc<T> {
        match self {
            EtaImage::X(p) => RatFunc::from_poly(p.clone()),
            EtaImage::Z(l) => l.to_ratfunc(),
        }
    }
}

/// Substitutes `η → x²` (Wilson) or `η → (z + z⁻¹)/2` (Askey-Wilson).
pub fn compose_eta<T: Scalar>(p: &Poly<T>, family: Family) -> EtaImage<T> {
    match family {
        Family::Wilson => {
            let mut coeffs = vec![T::zero(); 2 * p.coeffs().len()];
            for (k, c) in p.coeffs().iter().enumerate() {
                coeffs[2 * k] = c.clone();
            }
            EtaImage::X(Poly::new(Var::X, coeffs))
        }
        Family::AskeyWilson => {
            let half = T::ratio(1, 2);
            let eta = LaurentPoly::new(-1, vec![half.clone(), T::zero(), half]);
            let mut acc = LaurentPoly::zero();
            for c in p.coeffs().iter().rev() {
                acc = &(&acc * &eta) + &LaurentPoly::constant(c.clone());
            }
            EtaImage::Z(acc)
        }
    }
}

/// `p(x + c)`.
pub fn shift_x<T: Scalar>(p: &Poly<T>, c: &T) -> Poly<T> {
    p.shift_x(c)
}

/// `p(c z)`; rejects `c = 0`.
pub fn scale_z<T: Scalar>(p: &LaurentPoly<T>, c: &T) -> Result<LaurentPoly<T>> {
    p.scale_z(c)
}

pub fn ratfunc_is_zero<T: Scalar>(r: &RatFunc<T>) -> bool {
    r.is_zero()
}

/// Inverse of [`compose_eta`] for the Askey-Wilson side: writes a symmetric
/// Laurent polynomial as a polynomial in `η`. Returns `None` when the input is
/// not symmetric under `z → 1/z`.
pub fn laurent_to_eta<T: Scalar>(l: &LaurentPoly<T>) -> Option<Poly<T>> {
    if l.is_zero() {
        return Some(Poly::zero(Var::Eta));
    }
    if l.min_exp() != -l.max_exp() {
        return None;
    }
    let d = l.max_exp() as usize;
    let mut rest = l.clone();
    let mut out = vec![T::zero(); d + 1];
    let two = T::from_i64(2);
    let base = LaurentPoly::new(-1, vec![T::one(), T::zero(), T::one()]);
    for k in (0..=d).rev() {
        let c = rest.coeff(k as i64);
        if c.is_zero() {
            continue;
        }
        // (z + 1/z)^k = (2η)^k
        let mut pow = LaurentPoly::constant(c.clone());
        for _ in 0..k {
            pow = &pow * &base;
        }
        rest = &rest - &pow;
        out[k] = c * two.powi(k as i32);
    }
    rest.is_zero().then(|| Poly::new(Var::Eta, out))
}

/// Inverse of [`compose_eta`] for the Wilson side: an even polynomial in `x`
/// written in `η = x²`. `None` if an odd coefficient is nonzero.
pub fn even_to_eta<T: Scalar>(p: &Poly<T>) -> Option<Poly<T>> {
    let cs = p.coeffs();
    if cs.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
        return None;
    }
    Some(Poly::new(Var::Eta, cs.iter().step_by(2).cloned().collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::{GaussianRational as G, Scalar};
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    fn eta_poly(cs: &[i64]) -> Poly<G> {
        Poly::new(Var::Eta, cs.iter().map(|&c| G::from(c)).collect())
    }

    #[test]
    fn compose_eta_examples() {
        assert_eq!(
            compose_eta(&eta_poly(&[0, 1]), Family::Wilson),
            EtaImage::X(Poly::new(Var::X, vec![G::zero(), G::zero(), G::one()]))
        );
        for fam in [Family::Wilson, Family::AskeyWilson] {
            let one = compose_eta(&eta_poly(&[1]), fam).to_ratfunc();
            assert_eq!(one.num().coeffs(), &[G::one()]);
        }
        let aw = compose_eta(&eta_poly(&[4, -4]), Family::AskeyWilson);
        assert_eq!(aw, EtaImage::Z(LaurentPoly::new(-1, vec![G::from(-2), G::from(4), G::from(-2)])));
    }

    #[test]
    fn shift_x_examples() {
        let x2 = Poly::new(Var::X, vec![G::zero(), G::zero(), G::one()]);
        let shifted = shift_x(&x2, &-G::i());
        assert_eq!(shifted, Poly::new(Var::X, vec![G::from(-1), -G::i() * G::from(2), G::one()]));
        assert_eq!(shift_x(&x2, &G::zero()), x2);
        let x = Poly::<G>::identity(Var::X);
        assert_eq!(shift_x(&x, &(G::i() * G::ratio(1, 2))), Poly::new(Var::X, vec![G::i() * G::ratio(1, 2), G::one()]));
    }

    #[test]
    fn scale_z_examples() {
        let zz = LaurentPoly::new(-1, vec![G::one(), G::zero(), G::one()]);
        let q = G::ratio(1, 4);
        assert_eq!(scale_z(&zz, &q).unwrap(), LaurentPoly::new(-1, vec![G::from(4), G::zero(), q.clone()]));
        assert_eq!(scale_z(&zz, &G::one()).unwrap(), zz);
        assert_eq!(
            scale_z(&zz, &G::ratio(1, 2)).unwrap(),
            LaurentPoly::new(-1, vec![G::from(2), G::zero(), G::ratio(1, 2)])
        );
        assert!(scale_z(&zz, &G::zero()).is_err());
    }

    #[test]
    fn ratfunc_zero_examples() {
        let x = Poly::<G>::identity(Var::X);
        let one = Poly::<G>::one(Var::X);
        let zero = RatFunc::new(Poly::zero(Var::X), &x + &one);
        assert!(ratfunc_is_zero(&zero));
        let lhs = RatFunc::new(&(&x * &x) - &one, &x - &one);
        let rhs = RatFunc::from_poly(&x + &one);
        assert!(ratfunc_is_zero(&(&lhs - &rhs)));
        assert!(!ratfunc_is_zero(&RatFunc::new(one, x)));
    }

    #[test]
    fn canonical_form_reduces() {
        let x = Poly::<G>::identity(Var::X);
        let one = Poly::<G>::one(Var::X);
        let r = RatFunc::new((&(&x * &x) - &one).scale(&G::from(3)), (&x - &one).scale(&G::from(2)));
        let c = r.canonical();
        assert_eq!(c.den(), &Poly::one(Var::X));
        assert_eq!(c.num(), &(&x + &one).scale(&G::ratio(3, 2)));
    }

    #[test]
    fn eta_roundtrip() {
        let p = eta_poly(&[3, -1, 0, 7]);
        match compose_eta(&p, Family::AskeyWilson) {
            EtaImage::Z(l) => {
                assert!(l.is_symmetric());
                assert_eq!(laurent_to_eta(&l), Some(p.clone()));
            }
            _ => unreachable!(),
        }
        match compose_eta(&p, Family::Wilson) {
            EtaImage::X(q) => assert_eq!(even_to_eta(&q), Some(p)),
            _ => unreachable!(),
        }
        assert_eq!(laurent_to_eta(&LaurentPoly::new(0, vec![G::one(), G::one()])), None);
    }

    fn small_g() -> impl Strategy<Value = G> {
        (-9i64..9, 1i64..5, -9i64..9, 1i64..5)
            .prop_map(|(a, b, c, d)| G::new(crate::numfield::rat(a, b), crate::numfield::rat(c, d)))
    }

    fn small_poly(var: Var, max_deg: usize) -> impl Strategy<Value = Poly<G>> {
        proptest::collection::vec(small_g(), 0..=max_deg + 1).prop_map(move |cs| Poly::new(var, cs))
    }

    fn sym_laurent() -> impl Strategy<Value = LaurentPoly<G>> {
        proptest::collection::vec(-9i64..9, 1..6).prop_map(|half| {
            let mut cs: Vec<G> = half.iter().rev().map(|&c| G::from(c)).collect();
            cs.extend(half.iter().skip(1).map(|&c| G::from(c)));
            LaurentPoly::new(-(half.len() as i64 - 1), cs)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn shift_roundtrip(p in small_poly(Var::X, 20), c in small_g()) {
            prop_assert_eq!(p.shift_x(&c).shift_x(&-c), p);
        }

        #[test]
        fn scale_roundtrip(cs in proptest::collection::vec(small_g(), 0..10), lo in -5i64..5, c in small_g()) {
            prop_assume!(!c.is_zero());
            let p = LaurentPoly::new(lo, cs);
            let back = p.scale_z(&c).unwrap().scale_z(&(G::one() / c)).unwrap();
            prop_assert_eq!(back, p);
        }

        #[test]
        fn compose_eta_is_ring_hom(a in small_poly(Var::Eta, 6), b in small_poly(Var::Eta, 6)) {
            for fam in [Family::Wilson, Family::AskeyWilson] {
                let lhs = compose_eta(&(&a * &b), fam).to_ratfunc();
                let rhs = &compose_eta(&a, fam).to_ratfunc() * &compose_eta(&b, fam).to_ratfunc();
                prop_assert!((&lhs - &rhs).is_zero());
            }
        }

        /// Real symmetric input: scaling by c then applying the conjugate
        /// substitution (conj coefficients, z → 1/z) equals scaling by 1/c̄.
        #[test]
        fn scaled_symmetric_self_conjugacy(p in sym_laurent(), c in small_g()) {
            prop_assume!(!c.is_zero());
            let scaled = p.scale_z(&c).unwrap();
            let starred = scaled.conj_coeffs().invert();
            let expect = p.scale_z(&(G::one() / c.conj())).unwrap();
            prop_assert_eq!(starred, expect);
        }
    }
}
