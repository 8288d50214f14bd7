//! The Askey-Wilson to Wilson limit `q = e^{−π/L} → 1`.

use std::f64::consts::PI;

use num_complex::Complex;
use twofloat::TwoFloat;

use super::points::{conjugate_at, deformed_potential_eval, eta_at, real};
use crate::classical::ParamSet;
use crate::error::{Error, Result};
use crate::exceptional::{exceptional_eval, xi_eval};
use crate::numfield::FloatReal;
use crate::polycore::Family;
use crate::report::{Residual, Status, Timer, VerificationReport};

/// Working precision of the limit sweep.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Precision {
    #[default]
    Double,
    /// Double-double, about 32 digits.
    Extended,
}

#[derive(Clone, Debug)]
pub struct LimitConfig {
    /// Sample points `x^W` on the Wilson side.
    pub grid: Vec<f64>,
    /// Added to every scaling exponent; nonzero values are a negative
    /// control.
    pub exponent_offset: i32,
    pub precision: Precision,
}

impl Default for LimitConfig {
    fn default() -> Self {
        Self { grid: (1..=12).map(|k| 0.25 * k as f64).collect(), exponent_offset: 0, precision: Precision::Double }
    }
}

/// Largest pointwise relative deviation `|scaled − Wilson| / |Wilson|` over
/// the grid at one `L`.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize)]
pub struct LimitRow {
    #[serde(rename = "L")]
    pub l: f64,
    pub q: f64,
    pub xi: f64,
    pub poly: f64,
    pub potential: f64,
}

impl LimitRow {
    pub fn max(&self) -> f64 {
        self.xi.max(self.poly).max(self.potential)
    }
}

#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct LimitTable {
    pub ell: usize,
    pub n: usize,
    pub rows: Vec<LimitRow>,
}

/// Deviations below this are already at rounding level and are not
/// required to shrink further.
const FLOOR: f64 = 1e-12;

impl LimitTable {
    /// Worst ratio between consecutive rows over the three quantities; a
    /// quantity that is at the rounding floor in both rows is skipped.
    pub fn min_ratio(&self) -> f64 {
        let mut worst = f64::INFINITY;
        for w in self.rows.windows(2) {
            let pairs = [(w[0].xi, w[1].xi), (w[0].poly, w[1].poly), (w[0].potential, w[1].potential)];
            for (a, b) in pairs {
                if a <= FLOOR && b <= FLOOR {
                    continue;
                }
                worst = worst.min(a / b);
            }
        }
        worst
    }

    /// Every deviation shrinks by at least `factor` from one `L` to the next.
    pub fn converges(&self, factor: f64) -> bool {
        self.min_ratio() >= factor
    }
}

/// The Askey-Wilson parameters `a_j = q^{a_j^W}` with `q = e^{−π/L}`.
pub fn aw_params_for<F: FloatReal>(wilson: &ParamSet<Complex<F>>, l: f64) -> ParamSet<Complex<F>> {
    let step = -real::<F>(PI) / real::<F>(l);
    let a = wilson.a().map(|a| (a * step).exp());
    let s = Complex::new((step * real::<F>(0.5)).exp(), F::zero());
    ParamSet::new_unchecked(Family::AskeyWilson, a, s)
}

fn lift<F: FloatReal>(p: &ParamSet<num_complex::Complex64>) -> ParamSet<Complex<F>> {
    let c = |z: &num_complex::Complex64| Complex::new(real::<F>(z.re), real::<F>(z.im));
    ParamSet::new_unchecked(p.family(), p.a().each_ref().map(c), c(p.s()))
}

fn row<F: FloatReal>(
    ell: usize,
    n: usize,
    wilson: &ParamSet<Complex<F>>,
    l: f64,
    cfg: &LimitConfig,
) -> Result<LimitRow> {
    let aw = aw_params_for(wilson, l);
    let q = aw.q().re;
    let one_minus_q = -(real::<F>(-PI / l)).exp_m1();
    let scale = |power: i32| one_minus_q.powi(-(power + cfg.exponent_offset));
    let mut worst = [0.0f64; 3];
    for &xw in &cfg.grid {
        let xw_c = Complex::new(real::<F>(xw), F::zero());
        let x = Complex::new(real::<F>(PI * xw / l), F::zero());
        let pa = eta_at(&aw, x, 0);
        let pw = eta_at(wilson, xw_c, 0);

        let xi_aw = xi_eval(ell, &aw, &pa.eta, &pa.one_minus) * scale(3 * ell as i32);
        let xi_w = xi_eval(ell, wilson, &pw.eta, &pw.one_minus);
        let p_aw = exceptional_eval(ell, n, &aw, &pa.eta, &pa.one_minus)? * scale(3 * (ell + n) as i32);
        let p_w = exceptional_eval(ell, n, wilson, &pw.eta, &pw.one_minus)?;
        let v_aw = deformed_potential_eval(ell, &aw, x)? * scale(2);
        let v_w = conjugate_at(|y| deformed_potential_eval(ell, wilson, y), xw_c)?;

        for (k, (got, want)) in [(xi_aw, xi_w), (p_aw, p_w), (v_aw, v_w)].into_iter().enumerate() {
            let d = ((got - want).norm() / want.norm()).to_f64().unwrap_or(f64::NAN);
            worst[k] = if d.is_nan() { f64::INFINITY } else { worst[k].max(d) };
        }
    }
    Ok(LimitRow { l, q: q.to_f64().unwrap_or(f64::NAN), xi: worst[0], poly: worst[1], potential: worst[2] })
}

fn sweep<F: FloatReal>(
    ell: usize,
    n: usize,
    wilson: &ParamSet<num_complex::Complex64>,
    ls: &[f64],
    cfg: &LimitConfig,
) -> Result<LimitTable> {
    let w = lift::<F>(wilson);
    let rows = ls.iter().map(|&l| row(ell, n, &w, l, cfg)).collect::<Result<Vec<_>>>()?;
    Ok(LimitTable { ell, n, rows })
}

/// Deviation of the rescaled Askey-Wilson `ξ_ℓ`, `P_{ℓ,n}` and `V_ℓ` from
/// their Wilson counterparts `ξ_ℓ^W`, `P_{ℓ,n}^W` and `V_ℓ^{W*}`, for each
/// `L`.
pub fn aw_to_w_limit(
    ell: usize,
    n: usize,
    wilson: &ParamSet<num_complex::Complex64>,
    ls: &[f64],
    cfg: &LimitConfig,
) -> Result<LimitTable> {
    if wilson.family() != Family::Wilson {
        return Err(Error::InvalidParams("the limit starts from Wilson parameters".into()));
    }
    if ls.windows(2).any(|w| w[1] <= w[0]) || ls.iter().any(|&l| l <= 0.0) {
        return Err(Error::InvalidParams("L values must be positive and increasing".into()));
    }
    match cfg.precision {
        Precision::Double => sweep::<f64>(ell, n, wilson, ls, cfg),
        Precision::Extended => sweep::<TwoFloat>(ell, n, wilson, ls, cfg),
    }
}

/// The limit sweep as a report: pass iff every deviation shrinks by at
/// least `factor` per step in `L`.
pub fn check_limit(
    ell: usize,
    n: usize,
    wilson: &ParamSet<num_complex::Complex64>,
    ls: &[f64],
    cfg: &LimitConfig,
    factor: f64,
) -> Result<(VerificationReport, LimitTable)> {
    let timer = Timer::start();
    let table = aw_to_w_limit(ell, n, wilson, ls, cfg)?;
    let ratio = table.min_ratio();
    let mut params = serde_json::json!({
        "family": "wilson",
        "a": wilson.a().iter().map(|a| format!("{a}")).collect::<Vec<_>>(),
        "ell": ell,
        "n": n,
        "L": ls,
    });
    if cfg.exponent_offset != 0 {
        params["exponent_offset"] = cfg.exponent_offset.into();
    }
    let status = if ratio >= factor { Status::Pass } else { Status::Fail };
    let report = timer
        .finish("aw_to_wilson_limit", params, status, Some(Residual::Numeric { value: ratio }))
        .with_detail(format!("smallest shrink factor per step {ratio:.3}"));
    Ok((report, table))
}
