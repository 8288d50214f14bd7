use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numfield::Scalar;

/// Name of the indeterminate a polynomial is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    /// The sinusoidal coordinate.
    Eta,
    /// The real coordinate (Wilson side).
    X,
    /// `z = e^{ix}` (Askey-Wilson side).
    Z,
}

/// Dense univariate polynomial, coefficients stored from degree 0 upward.
///
/// The coefficient vector never carries trailing zeros; the zero polynomial
/// has an empty vector.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
pub struct Poly<T> {
    var: Var,
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(var: Var, mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { var, coeffs }
    }

    pub fn zero(var: Var) -> Self {
        Self { var, coeffs: Vec::new() }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, T::one())
    }

    pub fn constant(var: Var, c: T) -> Self {
        Self::new(var, vec![c])
    }

    /// `c · var^k`
    pub fn monomial(var: Var, c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::new(var, coeffs)
    }

    /// The polynomial `var` itself.
    pub fn identity(var: Var) -> Self {
        Self::monomial(var, T::one(), 1)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero(self.var);
        }
        Self::new(self.var, self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiply by `var^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { var: self.var, coeffs }
    }

    pub fn eval(&self, at: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc * at.clone() + c.clone())
    }

    /// `self(other(var))`, result in `other`'s variable.
    pub fn compose(&self, other: &Poly<T>) -> Poly<T> {
        let mut acc = Poly::zero(other.var);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * other) + &Poly::constant(other.var, c.clone());
        }
        acc
    }

    /// Taylor shift: returns `p(var + c)`, exact.
    pub fn shift_x(&self, c: &T) -> Self {
        if c.is_zero() || self.coeffs.len() < 2 {
            return self.clone();
        }
        // synthetic division repeated, O(n^2)
        let mut a = self.coeffs.clone();
        let n = a.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let t = a[j + 1].clone() * c.clone();
                a[j] = a[j].clone() + t;
            }
        }
        Self::new(self.var, a)
    }

    /// `p(c · var)`: coefficient `k` multiplied by `c^k`.
    pub fn scale_var(&self, c: &T) -> Self {
        let mut pow = T::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.clone() * pow.clone());
            pow = pow * c.clone();
        }
        Self::new(self.var, out)
    }

    /// Coefficient-wise complex conjugation (the `*` operation on an
    /// analytic function written in this variable).
    pub fn conj_coeffs(&self) -> Self {
        Self { var: self.var, coeffs: self.coeffs.iter().map(Scalar::conj).collect() }
    }

    /// Coefficients reversed against degree `n`: `var^n p(1/var)`.
    /// Requires `n >= deg p`.
    pub fn reverse(&self, n: usize) -> Self {
        let mut out = vec![T::zero(); n + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[n - k] = c.clone();
        }
        Self::new(self.var, out)
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c.clone() * T::from_i64(k as i64)).collect();
        Self::new(self.var, coeffs)
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_real)
    }

    pub fn monic(&self) -> Self {
        match self.lc() {
            None => self.clone(),
            Some(lc) => {
                let inv = T::one() / lc.clone();
                self.scale(&inv)
            }
        }
    }

    /// Euclidean division over the coefficient field.
    pub fn div_rem(&self, d: &Poly<T>) -> (Poly<T>, Poly<T>) {
        let dd = d.degree().expect("polynomial division by zero");
        let lc_inv = T::one() / d.coeffs[dd].clone();
        let mut r = self.coeffs.clone();
        let mut q = vec![T::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let t = r.last().unwrap().clone() * lc_inv.clone();
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].clone() - t.clone() * dc.clone();
            }
            q[k] = t;
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        (Poly::new(self.var, q), Poly::new(self.var, r))
    }

    /// Exact quotient, or an error carrying the remainder.
    pub fn exact_div(&self, d: &Poly<T>, context: &str) -> Result<Poly<T>> {
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision { context: context.to_string(), remainder: format!("{r:?}") })
        }
    }

    /// Pseudo-remainder `lc(d)^(deg self - deg d + 1) · self mod d`, computed
    /// without division.
    pub fn pseudo_rem(&self, d: &Poly<T>) -> Poly<T> {
        let dd = d.degree().expect("pseudo-remainder by zero");
        let lb = d.coeffs[dd].clone();
        let mut r = self.clone();
        let mut e = (self.coeffs.len() as i64 - dd as i64).max(0);
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let t = Poly::monomial(self.var, r.coeffs[dr].clone(), dr - dd);
            r = &r.scale(&lb) - &(&t * d);
            e -= 1;
        }
        r.scale(&lb.powi(e as i32))
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.var, self.coeffs.iter().map(f).collect())
    }

    pub fn to_c64(&self) -> Poly<num_complex::Complex64> {
        self.map(Scalar::to_c64)
    }
}

impl<T: Scalar> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = match self.var {
            Var::Eta => "η",
            Var::X => "x",
            Var::Z => "z",
        };
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c:?})")?,
                1 => write!(f, "({c:?}){v}")?,
                _ => write!(f, "({c:?}){v}^{k}")?,
            }
        }
        Ok(())
    }
}

impl<T: Scalar> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, o: &Poly<T>) -> Poly<T> {
        debug_assert_eq!(self.var, o.var, "adding polynomials in different variables");
        let n = self.coeffs.len().max(o.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + o.coeff(k)).collect();
        Poly::new(self.var, coeffs)
    }
}

impl<T: Scalar> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, o: &Poly<T>) -> Poly<T> {
        debug_assert_eq!(self.var, o.var, "subtracting polynomials in different variables");
        let n = self.coeffs.len().max(o.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - o.coeff(k)).collect();
        Poly::new(self.var, coeffs)
    }
}

impl<T: Scalar> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, o: &Poly<T>) -> Poly<T> {
        debug_assert_eq!(self.var, o.var, "multiplying polynomials in different variables");
        if self.is_zero() || o.is_zero() {
            return Poly::zero(self.var);
        }
        let mut out = vec![T::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(self.var, out)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly { var: self.var, coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

macro_rules! owned_poly_ops {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, o: Poly<T>) -> Poly<T> {
                (&self).$m(&o)
            }
        }
    };
}

owned_poly_ops!(Add, add);
owned_poly_ops!(Sub, sub);
owned_poly_ops!(Mul, mul);

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}
