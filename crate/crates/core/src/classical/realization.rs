use super::ParamSet;
use crate::error::{Error, Result};
use crate::numfield::Scalar;
use crate::polycore::{compose_eta, even_to_eta, laurent_to_eta, EtaImage, Family, LaurentPoly, Poly, RatFunc, Var};

/// Functions of `x` as exact rational functions of one variable `t`.
///
/// Wilson uses `t = x`, so `x → x − ikγ/2` is the translation `t → t − ik/2`.
/// Askey-Wilson uses `t = z = e^{ix}`, where the same shift becomes the
/// dilation `z → z s^k`. The `*` operation conjugates the Taylor coefficients
/// in `x`; in `z` that is coefficient conjugation combined with `z → 1/z`.
#[derive(Clone, Debug)]
pub struct Realization<T> {
    family: Family,
    s: T,
}

impl<T: Scalar> Realization<T> {
    pub fn of(lambda: &ParamSet<T>) -> Self {
        Self { family: lambda.family(), s: lambda.s().clone() }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn var(&self) -> Var {
        match self.family {
            Family::Wilson => Var::X,
            Family::AskeyWilson => Var::Z,
        }
    }

    pub fn constant(&self, c: T) -> RatFunc<T> {
        RatFunc::constant(self.var(), c)
    }

    /// `r(x − ikγ/2)`.
    pub fn shift(&self, r: &RatFunc<T>, k: i32) -> RatFunc<T> {
        if k == 0 {
            return r.clone();
        }
        match self.family {
            Family::Wilson => r.shift_x(&(-T::i() * T::ratio(k as i64, 2))),
            Family::AskeyWilson => r.scale_var(&self.s.powi(k)),
        }
    }

    pub fn star(&self, r: &RatFunc<T>) -> RatFunc<T> {
        match self.family {
            Family::Wilson => r.conj_coeffs(),
            Family::AskeyWilson => r.conj_coeffs().invert_var(),
        }
    }

    /// `p(η(x − ikγ/2))`.
    pub fn eta_shifted(&self, p: &Poly<T>, k: i32) -> RatFunc<T> {
        match compose_eta(p, self.family) {
            EtaImage::X(px) => {
                let px = if k == 0 { px } else { px.shift_x(&(-T::i() * T::ratio(k as i64, 2))) };
                RatFunc::from_poly(px)
            }
            EtaImage::Z(l) => {
                let l = if k == 0 { l } else { l.scale_z(&self.s.powi(k)).expect("s is nonzero") };
                l.to_ratfunc()
            }
        }
    }

    /// `φ(x)`: `2x` or `2 sin x = −i(z² − 1)/z`.
    pub fn phi(&self) -> RatFunc<T> {
        match self.family {
            Family::Wilson => RatFunc::from_poly(Poly::new(Var::X, vec![T::zero(), T::from_i64(2)])),
            Family::AskeyWilson => RatFunc::new(
                Poly::new(Var::Z, vec![T::i(), T::zero(), -T::i()]),
                Poly::new(Var::Z, vec![T::zero(), T::one()]),
            ),
        }
    }

    /// Writes a rational function that is really a polynomial in `η(x)` back
    /// as that polynomial. Fails if the division is inexact or the result is
    /// not even in `x` (Wilson) or symmetric under `z → 1/z` (Askey-Wilson).
    pub fn pull_back(&self, r: &RatFunc<T>, context: &str) -> Result<Poly<T>> {
        let not_eta = || Error::InexactDivision {
            context: context.to_string(),
            remainder: "result is not a polynomial in the sinusoidal coordinate".into(),
        };
        match self.family {
            Family::Wilson => {
                let p = r.to_poly(context)?;
                even_to_eta(&p).ok_or_else(not_eta)
            }
            Family::AskeyWilson => {
                // split off the power of z in the denominator
                let den = r.den();
                let m = den.coeffs().iter().take_while(|c| c.is_zero()).count();
                let stripped = Poly::new(Var::Z, den.coeffs()[m..].to_vec());
                let p = r.num().exact_div(&stripped, context)?;
                let l = LaurentPoly::new(-(m as i64), p.into_coeffs());
                laurent_to_eta(&l).ok_or_else(not_eta)
            }
        }
    }
}
