//! The undeformed Wilson and Askey-Wilson systems: parameters, polynomials,
//! spectral data, potentials and the forward/backward shift operators.

mod operators;
mod polys;
mod realization;
mod spectral;

pub use operators::{
    apply_backward, apply_forward, check_difference_eq, check_shape_invariance, check_shape_invariance_with,
    difference_eq_residual, potential, shape_invariance_residuals, PotentialPair,
};
pub use polys::{classical_eval, classical_poly};
pub use realization::Realization;
pub use spectral::{norm_h, norm_h_numeric, NormValue};

use num_traits::{One, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::numfield::{rat_sqrt, GaussianRational, Rat, Scalar};
use crate::polycore::Family;

/// Four parameters of one family together with `s = √q` (Askey-Wilson).
///
/// For Wilson the parameters are `a_j` themselves and parameter shifts are
/// additive; for Askey-Wilson they are `a_j = q^{λ_j}` and a shift of
/// `λ_j` by `k/2` multiplies `a_j` by `s^k`. The twist negates `λ₁, λ₂`,
/// i.e. negates or inverts `a₁, a₂`.
#[derive(Clone, PartialEq)]
pub struct ParamSet<T> {
    family: Family,
    a: [T; 4],
    s: T,
}

impl<T: Scalar> std::fmt::Debug for ParamSet<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{:?}", self.family.name(), self.a)?;
        if self.family == Family::AskeyWilson {
            write!(f, " s={:?}", self.s)?;
        }
        Ok(())
    }
}

impl<T: Scalar> ParamSet<T> {
    /// Wilson parameters; requires `Re a_j > 0` and a conjugation-closed set.
    pub fn wilson(a: [T; 4]) -> Result<Self> {
        let p = Self::new_unchecked(Family::Wilson, a, T::one());
        p.validate()?;
        Ok(p)
    }

    /// Askey-Wilson parameters with `q = s²`; requires `0 < s < 1`,
    /// `|a_j| < 1` and a conjugation-closed set.
    pub fn askey_wilson(a: [T; 4], s: T) -> Result<Self> {
        let p = Self::new_unchecked(Family::AskeyWilson, a, s);
        p.validate()?;
        Ok(p)
    }

    /// No validation. Shifted and twisted parameter sets routinely leave the
    /// original domain, so every derived set is built this way.
    pub fn new_unchecked(family: Family, a: [T; 4], s: T) -> Self {
        Self { family, a, s }
    }

    pub fn validate(&self) -> Result<()> {
        let zero = T::Real::zero();
        let one = T::Real::one();
        match self.family {
            Family::Wilson => {
                if let Some(a) = self.a.iter().find(|a| a.re() <= zero) {
                    return Err(Error::InvalidParams(format!("Wilson parameter {a:?} needs a positive real part")));
                }
            }
            Family::AskeyWilson => {
                if !self.s.is_real() || self.s.re() <= zero || self.s.re() >= one {
                    return Err(Error::InvalidParams(format!("need 0 < s < 1, got {:?}", self.s)));
                }
                if let Some(a) = self.a.iter().find(|a| a.norm_sqr() >= one) {
                    return Err(Error::InvalidParams(format!("Askey-Wilson parameter {a:?} needs modulus below 1")));
                }
            }
        }
        if !self.is_conjugation_closed() {
            return Err(Error::InvalidParams(format!("{:?} is not closed under conjugation", self.a)));
        }
        Ok(())
    }

    /// The stricter range in which the deformed systems are defined:
    /// `a₁, a₂` real, `{a₃, a₄}` conjugation-closed, and `0 < a_j < Re a_k`
    /// (Wilson) or `1 > a_j > |a_k|` (Askey-Wilson) for `j ∈ {1,2}`,
    /// `k ∈ {3,4}`.
    pub fn validate_restricted(&self) -> Result<()> {
        self.validate()?;
        let bad = |why: &str| Err(Error::InvalidParams(format!("{self:?} outside the deformable range: {why}")));
        if !self.a[0].is_real() || !self.a[1].is_real() {
            return bad("a1 and a2 must be real");
        }
        let (a3, a4) = (&self.a[2], &self.a[3]);
        if !((a3.is_real() && a4.is_real()) || a3.conj() == *a4) {
            return bad("{a3, a4} must be closed under conjugation");
        }
        for j in 0..2 {
            let aj = self.a[j].re();
            for k in 2..4 {
                let ok = match self.family {
                    Family::Wilson => aj > T::Real::zero() && aj < self.a[k].re(),
                    Family::AskeyWilson => aj.clone() * aj.clone() > self.a[k].norm_sqr() && aj < T::Real::one(),
                };
                if !ok {
                    return bad(&format!("a{} against a{}", j + 1, k + 1));
                }
            }
            if self.family == Family::AskeyWilson && aj <= T::Real::zero() {
                return bad("a1, a2 must be positive");
            }
        }
        Ok(())
    }

    /// `{a_j*} = {a_j}` as a multiset.
    pub fn is_conjugation_closed(&self) -> bool {
        let mut used = [false; 4];
        self.a.iter().all(|a| {
            let c = a.conj();
            match (0..4).find(|&k| !used[k] && self.a[k] == c) {
                Some(k) => {
                    used[k] = true;
                    true
                }
                None => false,
            }
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn a(&self) -> &[T; 4] {
        &self.a
    }

    /// `√q` for Askey-Wilson, `1` for Wilson.
    pub fn s(&self) -> &T {
        &self.s
    }

    pub fn q(&self) -> T {
        self.s.clone() * self.s.clone()
    }

    /// `1` (Wilson) or `q⁻¹` (Askey-Wilson).
    pub fn kappa(&self) -> T {
        match self.family {
            Family::Wilson => T::one(),
            Family::AskeyWilson => T::one() / self.q(),
        }
    }

    /// `Σ a_j` (Wilson) or `Π a_j` (Askey-Wilson).
    pub fn b(&self) -> T {
        match self.family {
            Family::Wilson => self.a.iter().cloned().fold(T::zero(), |x, y| x + y),
            Family::AskeyWilson => self.a.iter().cloned().fold(T::one(), |x, y| x * y),
        }
    }

    /// Shifts `λ_j` by `k_j / 2`.
    pub fn shifted(&self, k: [i32; 4]) -> Self {
        let mut a = self.a.clone();
        for (aj, &kj) in a.iter_mut().zip(&k) {
            if kj != 0 {
                *aj = match self.family {
                    Family::Wilson => aj.clone() + T::ratio(kj as i64, 2),
                    Family::AskeyWilson => aj.clone() * self.s.powi(kj),
                };
            }
        }
        Self::new_unchecked(self.family, a, self.s.clone())
    }

    /// `λ + k δ` with `δ = (½, ½, ½, ½)`.
    pub fn plus_delta(&self, k: i32) -> Self {
        self.shifted([k; 4])
    }

    /// `λ + k δ'` with `δ' = (−½, −½, ½, ½)`.
    pub fn plus_delta_prime(&self, k: i32) -> Self {
        self.shifted([-k, -k, k, k])
    }

    /// `(λ₁, λ₂, λ₃, λ₄) → (−λ₁, −λ₂, λ₃, λ₄)`.
    pub fn twist(&self) -> Self {
        let mut a = self.a.clone();
        for aj in a.iter_mut().take(2) {
            *aj = match self.family {
                Family::Wilson => -aj.clone(),
                Family::AskeyWilson => T::one() / aj.clone(),
            };
        }
        Self::new_unchecked(self.family, a, self.s.clone())
    }

    pub fn with_a(&self, a: [T; 4]) -> Self {
        Self::new_unchecked(self.family, a, self.s.clone())
    }

    /// JSON description used in reports.
    pub fn summary(&self) -> serde_json::Value {
        let a: Vec<String> = self.a.iter().map(|c| format!("{c:?}")).collect();
        match self.family {
            Family::Wilson => json!({ "family": "wilson", "a": a }),
            Family::AskeyWilson => json!({
                "family": "aw",
                "a": a,
                "q": format!("{:?}", self.q()),
                "s": format!("{:?}", self.s),
            }),
        }
    }

    /// Same parameters in double precision.
    pub fn to_c64(&self) -> ParamSet<num_complex::Complex64> {
        ParamSet::new_unchecked(self.family, self.a.clone().map(|c| c.to_c64()), self.s.to_c64())
    }
}

impl ParamSet<GaussianRational> {
    /// Askey-Wilson parameters from `q`, which must have a rational square
    /// root.
    pub fn askey_wilson_q(a: [GaussianRational; 4], q: &Rat) -> Result<Self> {
        let s = rat_sqrt(q)
            .ok_or_else(|| Error::InvalidParams(format!("q = {q} has no rational square root; pass s explicitly")))?;
        Self::askey_wilson(a, GaussianRational::real(s))
    }

    /// Askey-Wilson parameters from `q` and `s` given together; checks `s² = q`.
    pub fn askey_wilson_qs(a: [GaussianRational; 4], q: &Rat, s: &Rat) -> Result<Self> {
        if &(s * s) != q {
            return Err(Error::InvalidParams(format!("s = {s} is not a square root of q = {q}")));
        }
        Self::askey_wilson(a, GaussianRational::real(s.clone()))
    }
}
