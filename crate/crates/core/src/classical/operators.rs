use super::{classical_poly, ParamSet, Realization};
use crate::error::Result;
use crate::numfield::Scalar;
use crate::polycore::{Family, Poly, RatFunc, Var};
use crate::report::{Residual, Status, Timer, VerificationReport};

/// `V(x)` and `V*(x)` as rational functions of the coordinate variable.
#[derive(Clone)]
pub struct PotentialPair<T> {
    pub v: RatFunc<T>,
    pub v_star: RatFunc<T>,
}

impl<T: Scalar> std::fmt::Debug for PotentialPair<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "V = {:?}, V* = {:?}", self.v, self.v_star)
    }
}

impl<T: Scalar> PotentialPair<T> {
    pub fn from_v(realization: &Realization<T>, v: RatFunc<T>) -> Self {
        let v_star = realization.star(&v);
        Self { v, v_star }
    }
}

/// `V = Π(a_j + ix) / (2ix (2ix + 1))` (Wilson) or
/// `V = Π(1 − a_j z) / ((1 − z²)(1 − q z²))` (Askey-Wilson).
pub fn potential<T: Scalar>(lambda: &ParamSet<T>) -> PotentialPair<T> {
    let re = Realization::of(lambda);
    let v = match lambda.family() {
        Family::Wilson => {
            let num =
                lambda.a().iter().fold(Poly::one(Var::X), |acc, a| &acc * &Poly::new(Var::X, vec![a.clone(), T::i()]));
            let two_i = T::i() * T::from_i64(2);
            let den = &Poly::new(Var::X, vec![T::zero(), two_i.clone()]) * &Poly::new(Var::X, vec![T::one(), two_i]);
            RatFunc::new(num, den)
        }
        Family::AskeyWilson => {
            let num = lambda
                .a()
                .iter()
                .fold(Poly::one(Var::Z), |acc, a| &acc * &Poly::new(Var::Z, vec![T::one(), -a.clone()]));
            let den = &Poly::new(Var::Z, vec![T::one(), T::zero(), -T::one()])
                * &Poly::new(Var::Z, vec![T::one(), T::zero(), -lambda.q()]);
            RatFunc::new(num, den)
        }
    };
    PotentialPair::from_v(&re, v)
}

/// `F p = i φ⁻¹ (p(η(x − iγ/2)) − p(η(x + iγ/2)))`, returned in `η`.
pub fn apply_forward<T: Scalar>(lambda: &ParamSet<T>, p: &Poly<T>) -> Result<Poly<T>> {
    let re = Realization::of(lambda);
    let diff = &re.eta_shifted(p, 1) - &re.eta_shifted(p, -1);
    let r = &diff.scale(&T::i()) / &re.phi();
    re.pull_back(&r, "forward shift")
}

/// `B p = −i (V (φ p∘η)(x − iγ/2) − V* (φ p∘η)(x + iγ/2))`, returned in `η`.
pub fn apply_backward<T: Scalar>(lambda: &ParamSet<T>, p: &Poly<T>) -> Result<Poly<T>> {
    let re = Realization::of(lambda);
    let pot = potential(lambda);
    let g = &re.phi() * &re.eta_shifted(p, 0);
    let r = &(&pot.v * &re.shift(&g, 1)) - &(&pot.v_star * &re.shift(&g, -1));
    re.pull_back(&r.scale(&-T::i()), "backward shift")
}

/// `V (P(η(x−iγ)) − P(η)) + V* (P(η(x+iγ)) − P(η)) − E_n P(η)`.
pub fn difference_eq_residual<T: Scalar>(
    lambda: &ParamSet<T>,
    pot: &PotentialPair<T>,
    p: &Poly<T>,
    energy: &T,
) -> RatFunc<T> {
    let re = Realization::of(lambda);
    let here = re.eta_shifted(p, 0);
    let down = &re.eta_shifted(p, 2) - &here;
    let up = &re.eta_shifted(p, -2) - &here;
    &(&(&pot.v * &down) + &(&pot.v_star * &up)) - &here.scale(energy)
}

/// Exact check that `P_n` solves the difference equation with eigenvalue
/// `E_n`.
pub fn check_difference_eq<T: Scalar>(n: usize, lambda: &ParamSet<T>) -> VerificationReport {
    let timer = Timer::start();
    let p = classical_poly(n, lambda);
    let r = difference_eq_residual(lambda, &potential(lambda), &p, &lambda.energy(n));
    let mut params = lambda.summary();
    params["n"] = n.into();
    timer.exact("difference_equation", params, &r)
}

/// Residuals of the two shape-invariance relations
///
/// `V(x−iγ/2; λ) V*(x−iγ/2; λ) − κ² V(x; λ+δ) V*(x−iγ; λ+δ)` and
/// `V(x+iγ/2; λ) + V*(x−iγ/2; λ) − κ (V(x; λ+δ) + V*(x; λ+δ)) + E₁`,
///
/// for an arbitrary potential given as a function of the parameters.
pub fn shape_invariance_residuals<T, F>(lambda: &ParamSet<T>, potential: F, e1: &T) -> Result<(RatFunc<T>, RatFunc<T>)>
where
    T: Scalar,
    F: Fn(&ParamSet<T>) -> Result<PotentialPair<T>>,
{
    let re = Realization::of(lambda);
    let here = potential(lambda)?;
    let next = potential(&lambda.plus_delta(1))?;
    let kappa = lambda.kappa();
    let product = &(&re.shift(&here.v, 1) * &re.shift(&here.v_star, 1))
        - &(&next.v * &re.shift(&next.v_star, 2)).scale(&(kappa.clone() * kappa.clone()));
    let sum = &(&(&re.shift(&here.v, -1) + &re.shift(&here.v_star, 1)) - &(&next.v + &next.v_star).scale(&kappa))
        + &re.constant(e1.clone());
    Ok((product, sum))
}

/// Both shape-invariance relations as one report; the residual of the first
/// failing relation is attached.
pub fn check_shape_invariance_with<T, F>(
    check: &str,
    lambda: &ParamSet<T>,
    params: serde_json::Value,
    potential: F,
    e1: &T,
) -> Result<VerificationReport>
where
    T: Scalar,
    F: Fn(&ParamSet<T>) -> Result<PotentialPair<T>>,
{
    let timer = Timer::start();
    let (product, sum) = shape_invariance_residuals(lambda, potential, e1)?;
    let report = match (product.is_zero(), sum.is_zero()) {
        (true, true) => timer.finish(check, params, Status::Pass, None),
        (false, _) => timer
            .finish(check, params, Status::Fail, Some(Residual::from_ratfunc(&product)))
            .with_detail("product relation"),
        (true, false) => {
            timer.finish(check, params, Status::Fail, Some(Residual::from_ratfunc(&sum))).with_detail("sum relation")
        }
    };
    Ok(report)
}

/// Exact check of both shape-invariance relations for the undeformed
/// potential.
pub fn check_shape_invariance<T: Scalar>(lambda: &ParamSet<T>) -> VerificationReport {
    check_shape_invariance_with("shape_invariance", lambda, lambda.summary(), |mu| Ok(potential(mu)), &lambda.energy(1))
        .expect("the undeformed potential is always defined")
}
