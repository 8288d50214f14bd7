use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

use super::poly::{Poly, Var};
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};
use crate::numfield::Scalar;

/// Laurent polynomial `sum_k c_k z^(min_exp + k)`.
///
/// Extreme coefficients are nonzero unless the polynomial is zero, in which
/// case `coeffs` is empty and `min_exp` is 0.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LaurentPoly<T> {
    var: Var,
    min_exp: i64,
    coeffs: Vec<T>,
}

impl<T: Scalar> LaurentPoly<T> {
    pub fn new(min_exp: i64, coeffs: Vec<T>) -> Self {
        let mut coeffs = coeffs;
        let mut min_exp = min_exp;
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        coeffs.drain(..lead);
        min_exp += lead as i64;
        if coeffs.is_empty() {
            min_exp = 0;
        }
        Self { var: Var::Z, min_exp, coeffs }
    }

    pub fn zero() -> Self {
        Self::new(0, Vec::new())
    }

    pub fn constant(c: T) -> Self {
        Self::new(0, vec![c])
    }

    pub fn from_poly(p: &Poly<T>) -> Self {
        Self::new(0, p.coeffs().to_vec())
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn max_exp(&self) -> i64 {
        self.min_exp + self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `z^k`.
    pub fn coeff(&self, k: i64) -> T {
        let idx = k - self.min_exp;
        if idx < 0 {
            return T::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_else(T::zero)
    }

    /// `p(c z)`. Rejects `c = 0`.
    pub fn scale_z(&self, c: &T) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::Domain("scale_z by zero".into()));
        }
        let coeffs =
            self.coeffs.iter().enumerate().map(|(k, a)| a.clone() * c.powi((self.min_exp + k as i64) as i32)).collect();
        Ok(Self::new(self.min_exp, coeffs))
    }

    /// `p(1/z)`.
    pub fn invert(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let coeffs = self.coeffs.iter().rev().cloned().collect();
        Self::new(-self.max_exp(), coeffs)
    }

    pub fn conj_coeffs(&self) -> Self {
        Self::new(self.min_exp, self.coeffs.iter().map(Scalar::conj).collect())
    }

    /// Invariant under `z -> 1/z`.
    pub fn is_symmetric(&self) -> bool {
        self == &self.invert()
    }

    pub fn eval(&self, z: &T) -> T {
        let body = Poly::new(Var::Z, self.coeffs.clone()).eval(z);
        body * z.powi(self.min_exp as i32)
    }

    /// As a rational function `N(z) / z^k`.
    pub fn to_ratfunc(&self) -> RatFunc<T> {
        let body = Poly::new(Var::Z, self.coeffs.clone());
        if self.min_exp >= 0 {
            RatFunc::from_poly(body.shift_up(self.min_exp as usize))
        } else {
            let den = Poly::monomial(Var::Z, T::one(), (-self.min_exp) as usize);
            RatFunc::new(body, den)
        }
    }
}

impl<T: Scalar> Add for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn add(self, o: &LaurentPoly<T>) -> LaurentPoly<T> {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let lo = self.min_exp.min(o.min_exp);
        let hi = self.max_exp().max(o.max_exp());
        let coeffs = (lo..=hi).map(|k| self.coeff(k) + o.coeff(k)).collect();
        LaurentPoly::new(lo, coeffs)
    }
}

impl<T: Scalar> Sub for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn sub(self, o: &LaurentPoly<T>) -> LaurentPoly<T> {
        let lo = self.min_exp.min(o.min_exp);
        let hi = self.max_exp().max(o.max_exp());
        if hi < lo {
            return LaurentPoly::zero();
        }
        let coeffs = (lo..=hi).map(|k| self.coeff(k) - o.coeff(k)).collect();
        LaurentPoly::new(lo, coeffs)
    }
}

impl<T: Scalar> Mul for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn mul(self, o: &LaurentPoly<T>) -> LaurentPoly<T> {
        if self.is_zero() || o.is_zero() {
            return LaurentPoly::zero();
        }
        let a = Poly::new(Var::Z, self.coeffs.clone());
        let b = Poly::new(Var::Z, o.coeffs.clone());
        LaurentPoly::new(self.min_exp + o.min_exp, (&a * &b).into_coeffs())
    }
}
