//! Exact rational and Gaussian-rational arithmetic, the scalar abstraction the
//! rest of the crate is generic over, and (q-)Pochhammer symbols.
//!
//! Everything polynomial in this crate is written once against [`Scalar`].
//! Two families of implementations exist:
//!
//! * [`GaussianRational`]: exact `a + b i` with arbitrary-precision rational
//!   parts. All identity checks run over this type so that "zero" means zero.
//! * `Complex<F>` for `F` in {`f32`, `f64`, [`TwoFloat`]}: floating-point
//!   evaluation, used by the analysis layer.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{Float, FloatConst, Num, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use twofloat::TwoFloat;

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rat = BigRational;

/// Builds `n/d` as an exact rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Exact square root of a rational, if it exists in Q.
pub fn rat_sqrt(q: &Rat) -> Option<Rat> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rat::new(n, d))
    } else {
        None
    }
}

/// Formats a rational as `p` or `p/q`.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` (no decimals).
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    let bad = || Error::Parse(format!("not an exact rational: {s:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(n, d))
}

/// Real scalars usable as the real part of a [`Scalar`].
pub trait RealScalar: Clone + fmt::Debug + PartialOrd + Num + Neg<Output = Self> + Send + Sync + 'static {
    fn as_f64(&self) -> f64;

    fn abs_val(&self) -> Self {
        if *self < Self::zero() {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

impl RealScalar for Rat {
    fn as_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl RealScalar for f64 {
    fn as_f64(&self) -> f64 {
        *self
    }
}

impl RealScalar for f32 {
    fn as_f64(&self) -> f64 {
        *self as f64
    }
}

impl RealScalar for TwoFloat {
    fn as_f64(&self) -> f64 {
        self.hi() + self.lo()
    }
}

/// Floating-point real types that `Complex<F>` can be built on.
pub trait FloatReal: RealScalar + Float + FloatConst {}
impl FloatReal for f32 {}
impl FloatReal for f64 {}
impl FloatReal for TwoFloat {}

/// Coefficient field for polynomials and rational functions.
///
/// Implementations model a subfield of the complex numbers closed under
/// conjugation. `EXACT` distinguishes types where `is_zero` is a true
/// zero test from floating approximations.
pub trait Scalar:
    Clone
    + fmt::Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    type Real: RealScalar;
    const EXACT: bool;

    fn from_parts(re: Self::Real, im: Self::Real) -> Self;
    fn re(&self) -> Self::Real;
    fn im(&self) -> Self::Real;
    fn conj(&self) -> Self;
    fn from_i64(n: i64) -> Self;
    fn ratio(n: i64, d: i64) -> Self;
    fn to_c64(&self) -> Complex64;

    fn from_real(r: Self::Real) -> Self {
        Self::from_parts(r, Self::Real::zero())
    }

    fn i() -> Self {
        Self::from_parts(Self::Real::zero(), Self::Real::one())
    }

    fn norm_sqr(&self) -> Self::Real {
        let (re, im) = (self.re(), self.im());
        re.clone() * re + im.clone() * im
    }

    /// Zero imaginary part: exactly for exact types, to a relative
    /// tolerance otherwise.
    fn is_real(&self) -> bool;

    fn powi(&self, k: i32) -> Self {
        let mut base = if k < 0 { Self::one() / self.clone() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// Exact complex number `re + im·i` with rational parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rat,
    pub im: Rat,
}

impl GaussianRational {
    pub fn new(re: Rat, im: Rat) -> Self {
        Self { re, im }
    }

    pub fn real(re: Rat) -> Self {
        Self { re, im: Rat::zero() }
    }

    pub fn checked_inv(&self) -> Option<Self> {
        let n = self.norm_sqr();
        if n.is_zero() {
            None
        } else {
            Some(Self::new(&self.re / &n, -(&self.im / &n)))
        }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return f.write_str(&format_rat(&self.re));
        }
        let im_abs = format_rat(&self.im.abs());
        if self.re.is_zero() {
            let sign = if self.im.is_negative() { "-" } else { "" };
            return write!(f, "{sign}{im_abs}*i");
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{sign}{im_abs}*i", format_rat(&self.re))
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    /// Accepts `p/q`, `r/s*i`, `p/q+r/s*i` and `p/q-r/s*i`; a bare `i` is
    /// read as `1*i`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::Parse("empty number".into()));
        }
        let Some(body) = t.strip_suffix('i') else {
            return Ok(Self::real(parse_rat(&t)?));
        };
        let body = body.strip_suffix('*').unwrap_or(body);
        // split at the last sign that is not the leading one
        let split = body.char_indices().skip(1).filter(|&(_, c)| c == '+' || c == '-').map(|(k, _)| k).last();
        let (re, im) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("", body),
        };
        let im = match im {
            "" | "+" => Rat::one(),
            "-" => -Rat::one(),
            other => parse_rat(other.strip_prefix('+').unwrap_or(other))?,
        };
        let re = if re.is_empty() { Rat::zero() } else { parse_rat(re)? };
        Ok(Self::new(re, im))
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<Rat> for GaussianRational {
    fn from(r: Rat) -> Self {
        Self::real(r)
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::real(Rat::from_integer(BigInt::from(n)))
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::new(Rat::zero(), Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::real(Rat::one())
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: &GaussianRational) -> GaussianRational {
        if self.im.is_zero() && o.im.is_zero() {
            return GaussianRational::real(&self.re * &o.re);
        }
        GaussianRational::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }
}

impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn div(self, o: &GaussianRational) -> GaussianRational {
        if o.im.is_zero() {
            return GaussianRational::new(&self.re / &o.re, &self.im / &o.re);
        }
        let inv = o.checked_inv().expect("division by zero GaussianRational");
        self * &inv
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, o: GaussianRational) -> GaussianRational {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, o: &GaussianRational) -> GaussianRational {
                (&self).$m(o)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, o: &GaussianRational) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, o: &GaussianRational) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, o: &GaussianRational) {
        *self = &*self * o;
    }
}

impl Scalar for GaussianRational {
    type Real = Rat;
    const EXACT: bool = true;

    fn from_parts(re: Rat, im: Rat) -> Self {
        Self::new(re, im)
    }
    fn re(&self) -> Rat {
        self.re.clone()
    }
    fn im(&self) -> Rat {
        self.im.clone()
    }
    fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }
    fn from_i64(n: i64) -> Self {
        n.into()
    }
    fn ratio(n: i64, d: i64) -> Self {
        Self::real(rat(n, d))
    }
    fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.as_f64(), self.im.as_f64())
    }
    fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

impl<F: FloatReal> Scalar for Complex<F> {
    type Real = F;
    const EXACT: bool = false;

    fn from_parts(re: F, im: F) -> Self {
        Complex::new(re, im)
    }
    fn re(&self) -> F {
        self.re
    }
    fn im(&self) -> F {
        self.im
    }
    fn conj(&self) -> Self {
        Complex::conj(self)
    }
    fn from_i64(n: i64) -> Self {
        Complex::new(F::from(n).unwrap(), F::zero())
    }
    fn ratio(n: i64, d: i64) -> Self {
        Complex::new(F::from(n).unwrap() / F::from(d).unwrap(), F::zero())
    }
    fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.as_f64(), self.im.as_f64())
    }
    fn is_real(&self) -> bool {
        let tol = F::epsilon().sqrt();
        self.im.abs() <= tol * (F::one() + self.re.abs())
    }
}

/// Rising factorial `a (a+1) ... (a+n-1)`.
pub fn pochhammer<T: Scalar>(a: &T, n: usize) -> T {
    (0..n).fold(T::one(), |acc, k| acc * (a.clone() + T::from_i64(k as i64)))
}

/// `(a; q)_n = prod_{k<n} (1 - a q^k)`.
pub fn q_pochhammer<T: Scalar>(a: &T, q: &T, n: usize) -> T {
    let mut acc = T::one();
    let mut aqk = a.clone();
    for _ in 0..n {
        acc = acc * (T::one() - aqk.clone());
        aqk = aqk * q.clone();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type G = GaussianRational;

    fn g(re: (i64, i64), im: (i64, i64)) -> G {
        G::new(rat(re.0, re.1), rat(im.0, im.1))
    }

    #[test]
    fn pochhammer_small_cases() {
        let a = g((3, 7), (1, 2));
        assert_eq!(pochhammer(&a, 0), G::one());
        assert_eq!(pochhammer(&G::from(1), 3), G::from(6));
        assert_eq!(pochhammer(&G::from(-2), 4), G::zero());
    }

    #[test]
    fn q_pochhammer_small_cases() {
        let a = g((3, 7), (1, 2));
        let q = G::ratio(1, 4);
        assert_eq!(q_pochhammer(&a, &q, 0), G::one());
        assert_eq!(q_pochhammer(&a, &q, 1), G::one() - a.clone());
        assert_eq!(q_pochhammer(&G::ratio(1, 2), &q, 2), G::ratio(7, 16));
    }

    #[test]
    fn format_and_parse() {
        let cases = ["3/2", "-2", "0", "1/4+1/4*i", "1/4-1/4*i", "-3*i", "2+i", "5/3-i"];
        for s in cases {
            let v: G = s.parse().unwrap();
            let back: G = v.to_string().parse().unwrap();
            assert_eq!(v, back, "{s}");
        }
        assert_eq!("2+i".parse::<G>().unwrap(), g((2, 1), (1, 1)));
        assert_eq!("-1/2-3/4*i".parse::<G>().unwrap(), g((-1, 2), (-3, 4)));
        assert_eq!(g((1, 4), (-1, 4)).to_string(), "1/4-1/4*i");
        assert!("1.5".parse::<G>().is_err());
        assert!("1/0".parse::<G>().is_err());
    }

    #[test]
    fn exact_sqrt() {
        assert_eq!(rat_sqrt(&rat(1, 4)), Some(rat(1, 2)));
        assert_eq!(rat_sqrt(&rat(9, 49)), Some(rat(3, 7)));
        assert_eq!(rat_sqrt(&rat(1, 2)), None);
        assert_eq!(rat_sqrt(&rat(-1, 4)), None);
    }

    #[test]
    fn serde_as_string() {
        let v = g((1, 4), (1, 4));
        let j = serde_json::to_string(&v).unwrap();
        assert_eq!(j, "\"1/4+1/4*i\"");
        let back: G = serde_json::from_str(&j).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn powi_negative() {
        let two = G::from(2);
        assert_eq!(two.powi(-3), G::ratio(1, 8));
        assert_eq!(two.powi(0), G::one());
    }

    fn small_g() -> impl Strategy<Value = G> {
        (-20i64..20, 1i64..9, -20i64..20, 1i64..9).prop_map(|(a, b, c, d)| g((a, b), (c, d)))
    }

    proptest! {
        #[test]
        fn pochhammer_splits(a in small_g(), m in 0usize..10, n in 0usize..10) {
            let lhs = pochhammer(&a, m + n);
            let rhs = pochhammer(&a, m) * pochhammer(&(a.clone() + G::from(m as i64)), n);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn q_pochhammer_splits(a in small_g(), qn in 1i64..8, m in 0usize..8, n in 0usize..8) {
            let q = G::ratio(qn, 9);
            let lhs = q_pochhammer(&a, &q, m + n);
            let shifted = a.clone() * q.powi(m as i32);
            let rhs = q_pochhammer(&a, &q, m) * q_pochhammer(&shifted, &q, n);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn pochhammer_commutes_with_conj(a in small_g(), n in 0usize..12) {
            prop_assert_eq!(pochhammer(&a, n).conj(), pochhammer(&a.conj(), n));
        }

        #[test]
        fn field_axioms(a in small_g(), b in small_g(), c in small_g()) {
            prop_assert_eq!((a.clone() + b.clone()) * c.clone(), a.clone() * c.clone() + b.clone() * c.clone());
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert!(a.norm_sqr() >= Rat::zero());
            if !b.is_zero() {
                prop_assert_eq!((a.clone() / b.clone()) * b.clone(), a);
            }
        }
    }
}
