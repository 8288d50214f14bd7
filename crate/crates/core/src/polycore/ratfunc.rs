use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::Serialize;

use super::gcd::poly_gcd;
use super::poly::{Poly, Var};
use crate::error::{Error, Result};
use crate::numfield::Scalar;

/// Quotient of two polynomials in the same variable.
///
/// Arithmetic does not reduce; call [`RatFunc::canonical`] for the form with
/// coprime numerator and denominator and a monic denominator. A zero test
/// only needs the numerator, so identity checks never pay for a gcd.
#[derive(Clone, PartialEq, Serialize)]
pub struct RatFunc<T> {
    num: Poly<T>,
    den: Poly<T>,
}

impl<T: Scalar> RatFunc<T> {
    /// Panics if `den` is the zero polynomial.
    pub fn new(num: Poly<T>, den: Poly<T>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        Self { num, den }
    }

    pub fn try_new(num: Poly<T>, den: Poly<T>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain("rational function with zero denominator".into()));
        }
        Ok(Self { num, den })
    }

    pub fn from_poly(p: Poly<T>) -> Self {
        let var = p.var();
        Self { num: p, den: Poly::one(var) }
    }

    pub fn constant(var: Var, c: T) -> Self {
        Self::from_poly(Poly::constant(var, c))
    }

    pub fn num(&self) -> &Poly<T> {
        &self.num
    }

    pub fn den(&self) -> &Poly<T> {
        &self.den
    }

    pub fn var(&self) -> Var {
        self.num.var()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn scale(&self, c: &T) -> Self {
        Self { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn recip(&self) -> Result<Self> {
        Self::try_new(self.den.clone(), self.num.clone())
    }

    /// Apply the same substitution to numerator and denominator.
    pub fn map_polys(&self, f: impl Fn(&Poly<T>) -> Poly<T>) -> Self {
        Self::new(f(&self.num), f(&self.den))
    }

    /// `r(var + c)`.
    pub fn shift_x(&self, c: &T) -> Self {
        self.map_polys(|p| p.shift_x(c))
    }

    /// `r(c · var)`.
    pub fn scale_var(&self, c: &T) -> Self {
        self.map_polys(|p| p.scale_var(c))
    }

    /// `r(1/var)`, cleared of negative powers.
    pub fn invert_var(&self) -> Self {
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        let n = self.num.reverse(dn);
        let d = self.den.reverse(dd);
        if dd >= dn {
            Self::new(n.shift_up(dd - dn), d)
        } else {
            Self::new(n, d.shift_up(dn - dd))
        }
    }

    pub fn conj_coeffs(&self) -> Self {
        self.map_polys(Poly::conj_coeffs)
    }

    pub fn eval(&self, at: &T) -> Result<T> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(Error::Domain("rational function evaluated at a pole".into()));
        }
        Ok(self.num.eval(at) / d)
    }

    /// Coprime numerator and denominator, denominator monic.
    pub fn canonical(&self) -> Self {
        if self.num.is_zero() {
            return Self::from_poly(Poly::zero(self.var()));
        }
        let g = poly_gcd(&self.num, &self.den);
        let (num, _) = self.num.div_rem(&g);
        let (den, _) = self.den.div_rem(&g);
        let inv = T::one() / den.lc().cloned().unwrap();
        Self { num: num.scale(&inv), den: den.scale(&inv) }
    }

    /// The polynomial this rational function equals, if the denominator
    /// divides the numerator exactly.
    pub fn to_poly(&self, context: &str) -> Result<Poly<T>> {
        self.num.exact_div(&self.den, context)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(self.var(), T::one()), |acc, _| &acc * self)
    }
}

impl<T: Scalar> std::fmt::Debug for RatFunc<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{:?}] / [{:?}]", self.num, self.den)
    }
}

impl<T: Scalar> Add for &RatFunc<T> {
    type Output = RatFunc<T>;
    fn add(self, o: &RatFunc<T>) -> RatFunc<T> {
        if self.den == o.den {
            return RatFunc::new(&self.num + &o.num, self.den.clone());
        }
        RatFunc::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl<T: Scalar> Sub for &RatFunc<T> {
    type Output = RatFunc<T>;
    fn sub(self, o: &RatFunc<T>) -> RatFunc<T> {
        self + &(-o)
    }
}

impl<T: Scalar> Mul for &RatFunc<T> {
    type Output = RatFunc<T>;
    fn mul(self, o: &RatFunc<T>) -> RatFunc<T> {
        // cheap cancellation of identical factors keeps degrees down
        if self.den == o.num {
            return RatFunc::new(self.num.clone(), o.den.clone());
        }
        if self.num == o.den {
            return RatFunc::new(o.num.clone(), self.den.clone());
        }
        RatFunc::new(&self.num * &o.num, &self.den * &o.den)
    }
}

impl<T: Scalar> Div for &RatFunc<T> {
    type Output = RatFunc<T>;
    /// Panics on division by the zero function.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: &RatFunc<T>) -> RatFunc<T> {
        self * &o.recip().expect("division by the zero rational function")
    }
}

impl<T: Scalar> Neg for &RatFunc<T> {
    type Output = RatFunc<T>;
    fn neg(self) -> RatFunc<T> {
        RatFunc::new(-&self.num, self.den.clone())
    }
}

macro_rules! owned_rat_ops {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for RatFunc<T> {
            type Output = RatFunc<T>;
            fn $m(self, o: RatFunc<T>) -> RatFunc<T> {
                (&self).$m(&o)
            }
        }
    };
}

owned_rat_ops!(Add, add);
owned_rat_ops!(Sub, sub);
owned_rat_ops!(Mul, mul);
owned_rat_ops!(Div, div);
