//! End-to-end acceptance run: one PASS/FAIL line per criterion, each with
//! its own time budget. Criteria run one after another so that the timings
//! are not inflated by each other.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use xell_core::analysis::{
    aw_to_w_limit, count_real_zeros, gram_matrix, orthogonality_integral, zero_free_rectangle, LimitConfig,
    QuadratureConfig,
};
use xell_core::classical::{
    apply_backward, apply_forward, check_difference_eq, check_shape_invariance, classical_poly, norm_h, potential,
};
use xell_core::exceptional::{
    apply_backward_ell, apply_forward_ell, check_missing_degrees, check_rodrigues, check_shape_invariance_ell,
    deformed_potential, exceptional_coeffs, exceptional_poly, hermiticity_l1_margin, htilde_eigencheck, norm_h_ell,
    xi_poly,
};
use xell_core::library::{aw_classical, aw_deformable, wilson_classical, wilson_deformable};
use xell_core::numfield::{rat, RealScalar};
use xell_core::polycore::{Poly, Var};
use xell_core::{ExactParams, GaussianRational, ParamSet, VerificationReport};

/// Gram matrix: off-diagonal entries relative to `√(h_n h_m)`, diagonal
/// entries relative to `h_n`.
const GRAM_TOL: f64 = 1e-8;
/// `∫ φ₀² dx = π/3` at Wilson `a = (1,1,1,1)`.
const GROUND_NORM_TOL: f64 = 1e-10;
/// Grid points this close to the `ℓ = 1` inequality's boundary are excluded.
const BOUNDARY_BAND: f64 = 1e-3;
/// Required shrink of the limit deviation per doubling of `L`.
const LIMIT_FACTOR: f64 = 1.5;
const LIMIT_LS: [f64; 4] = [20.0, 40.0, 80.0, 160.0];

type Outcome = Result<String, String>;

fn all_deformable() -> Vec<ExactParams> {
    wilson_deformable().into_iter().chain(aw_deformable()).collect()
}

fn all_classical() -> Vec<ExactParams> {
    wilson_classical().into_iter().chain(aw_classical()).collect()
}

fn g(s: &str) -> GaussianRational {
    s.parse().unwrap()
}

/// Collects reports; the first failure is kept for the summary line.
#[derive(Default)]
struct Tally {
    runs: usize,
    failure: Option<String>,
}

impl Tally {
    fn add(&mut self, r: Result<VerificationReport, xell_core::Error>) {
        self.runs += 1;
        match r {
            Ok(r) if r.passed() => {}
            Ok(r) => {
                self.failure.get_or_insert_with(|| format!("{} failed at {}", r.check, r.params));
            }
            Err(e) => {
                self.failure.get_or_insert_with(|| e.to_string());
            }
        }
    }

    fn finish(self, what: &str) -> Outcome {
        match self.failure {
            None => Ok(format!("{} {what}, all exact zero", self.runs)),
            Some(f) => Err(f),
        }
    }
}

fn difference_equation() -> Outcome {
    let mut t = Tally::default();
    for p in all_classical() {
        for n in 0..=8 {
            t.add(Ok(check_difference_eq(n, &p)));
        }
    }
    t.finish("residuals")
}

fn eigen_identity() -> Outcome {
    let mut t = Tally::default();
    for p in all_deformable() {
        for ell in 1..=3 {
            for n in 0..=5 {
                t.add(htilde_eigencheck(ell, n, &p));
            }
        }
    }
    t.finish("residuals")
}

fn shape_invariance() -> Outcome {
    let mut t = Tally::default();
    for p in all_deformable() {
        t.add(Ok(check_shape_invariance(&p)));
        for ell in 1..=2 {
            t.add(check_shape_invariance_ell(ell, &p));
        }
    }
    t.finish("residual pairs")
}

fn rodrigues() -> Outcome {
    let mut t = Tally::default();
    for p in all_deformable() {
        for ell in 0..=3 {
            for n in 0..=5 {
                t.add(check_rodrigues(ell, n, &p));
            }
        }
    }
    t.finish("polynomial differences")
}

/// Whether `ξ_ℓ` is certified zero-free on the hermiticity rectangle.
fn certified(ell: usize, p: &ExactParams) -> bool {
    ell == 0 || zero_free_rectangle(ell, p).map(|r| r.zero_free() == Some(true)).unwrap_or(false)
}

fn orthogonality() -> Outcome {
    let cfg = QuadratureConfig::default();
    let one = ParamSet::wilson(["1", "1", "1", "1"].map(g)).unwrap();
    let h0 = orthogonality_integral(0, 0, 0, &one, &cfg).map_err(|e| e.to_string())?.value;
    let anchor = ((h0 - PI / 3.0) / (PI / 3.0)).abs();
    if anchor > GROUND_NORM_TOL {
        return Err(format!("h_0 at (1,1,1,1) off pi/3 by {anchor:.2e}"));
    }
    let (mut worst_diag, mut worst_off, mut matrices, mut skipped) = (0.0f64, 0.0f64, 0, 0);
    for p in all_deformable() {
        for ell in 0..=2 {
            if !certified(ell, &p) {
                skipped += 1;
                continue;
            }
            let gm = gram_matrix(ell, 4, &p, &cfg).map_err(|e| format!("{p:?} ell={ell}: {e}"))?;
            let h: Vec<f64> = (0..=4).map(|n| norm_h_ell(ell, n, &p).to_f64()).collect();
            for n in 0..=4 {
                worst_diag = worst_diag.max(((gm[n][n] - h[n]) / h[n]).abs());
                for m in 0..n {
                    worst_off = worst_off.max(gm[n][m].abs() / (h[n] * h[m]).sqrt());
                }
            }
            matrices += 1;
        }
    }
    let summary = format!(
        "{matrices} 5x5 matrices ({skipped} uncertified skipped), diagonal {worst_diag:.1e}, \
         off-diagonal {worst_off:.1e}, pi/3 anchor {anchor:.1e}"
    );
    if worst_diag <= GRAM_TOL && worst_off <= GRAM_TOL {
        Ok(summary)
    } else {
        Err(summary)
    }
}

fn zero_count() -> Outcome {
    let mut points = 0;
    for p in all_deformable() {
        for ell in 0..=3 {
            if !certified(ell, &p) {
                continue;
            }
            for n in 0..=5 {
                let zeros = count_real_zeros(ell, n, &p).map_err(|e| e.to_string())?;
                if zeros != n {
                    return Err(format!("{p:?} ell={ell} n={n}: {zeros} zeros"));
                }
                points += 1;
            }
        }
    }
    Ok(format!("{points} certified points, each with exactly n zeros"))
}

/// `20 × 20` grids: Wilson `(a₁, a₂, 3/2, 3/2)` with `a₁, a₂ ∈ {k/40}`, and
/// Askey-Wilson `(a₁, a₂, 1/10, 1/10)` at `q = 1/4` with
/// `a_j ∈ {(21 + 9k)/210}`, `k = 1..=20`.
fn hermiticity_grid() -> Outcome {
    let axis_w: Vec<GaussianRational> = (1..=20).map(|k| GaussianRational::real(rat(k, 40))).collect();
    let axis_aw: Vec<GaussianRational> = (1..=20).map(|k| GaussianRational::real(rat(21 + 9 * k, 210))).collect();
    let mut report = Vec::new();
    for (name, axis) in [("wilson", axis_w), ("aw", axis_aw)] {
        let (mut agree, mut banded, mut inconclusive, mut flips) = (0, 0, 0, [0usize; 2]);
        for a1 in &axis {
            for a2 in &axis {
                let p = match name {
                    "wilson" => ParamSet::wilson([a1.clone(), a2.clone(), g("3/2"), g("3/2")]),
                    _ => ParamSet::askey_wilson_q([a1.clone(), a2.clone(), g("1/10"), g("1/10")], &rat(1, 4)),
                }
                .map_err(|e| e.to_string())?;
                let margin = hermiticity_l1_margin(&p);
                if margin.as_f64().abs() <= BOUNDARY_BAND {
                    banded += 1;
                    continue;
                }
                let closed = margin > rat(0, 1);
                let rect = zero_free_rectangle(1, &p).map_err(|e| e.to_string())?;
                match rect.zero_free() {
                    None => inconclusive += 1,
                    Some(z) if z == closed => {
                        agree += 1;
                        flips[closed as usize] += 1;
                    }
                    Some(_) => return Err(format!("{p:?}: inequality {closed}, rectangle {:?}", rect.count)),
                }
            }
        }
        if inconclusive > 0 {
            return Err(format!("{name}: {inconclusive} inconclusive rectangle counts"));
        }
        report.push(format!("{name} {agree} agree ({} hermitian, {} not), {banded} in band", flips[1], flips[0]));
    }
    Ok(report.join("; "))
}

fn degeneration() -> Outcome {
    let one = Poly::one(Var::Eta);
    for p in all_classical() {
        let bad = |what: &str| Err(format!("{p:?}: {what} differs at l=0"));
        if xi_poly(0, &p) != one {
            return bad("xi_0");
        }
        let (v0, v) = (deformed_potential(0, &p).map_err(|e| e.to_string())?, potential(&p));
        if v0.v != v.v || v0.v_star != v.v_star {
            return bad("potential");
        }
        for n in 0..=5 {
            let pn = classical_poly(n, &p);
            if exceptional_poly(0, n, &p).map_err(|e| e.to_string())? != pn {
                return bad("polynomial");
            }
            let c = exceptional_coeffs(0, n, &p).map_err(|e| e.to_string())?;
            if !(c.a1 == g("0") && c.a2 == g("0") && c.b1 == g("0")) {
                return bad("coefficients");
            }
            if p.energy_ell(0, n) != p.energy(n)
                || p.forward_coeff_ell(0, n) != p.forward_coeff(n)
                || p.backward_coeff_ell(0, n) != p.backward_coeff(n)
                || norm_h_ell(0, n, &p) != norm_h(n, &p)
            {
                return bad("spectral data");
            }
            let lower = classical_poly(n, &p.plus_delta(1));
            let err = |e: xell_core::Error| e.to_string();
            if apply_forward_ell(0, &p, &pn).map_err(err)? != apply_forward(&p, &pn).map_err(err)?
                || apply_backward_ell(0, &p, &lower).map_err(err)? != apply_backward(&p, &lower).map_err(err)?
            {
                return bad("shift operators");
            }
        }
    }
    Ok(format!("{} parameter sets, n <= 5, all identical", all_classical().len()))
}

fn limit() -> Outcome {
    let mut worst = f64::INFINITY;
    let mut tables = 0;
    for p in wilson_deformable() {
        let w = p.to_c64();
        for ell in 0..=2 {
            for n in 0..=2 {
                let t = aw_to_w_limit(ell, n, &w, &LIMIT_LS, &LimitConfig::default()).map_err(|e| e.to_string())?;
                let r = t.min_ratio();
                if r < LIMIT_FACTOR {
                    return Err(format!("{p:?} ell={ell} n={n}: shrink {r:.3} per doubling"));
                }
                worst = worst.min(r);
                tables += 1;
            }
        }
    }
    Ok(format!("{tables} sweeps, smallest shrink per doubling {worst:.3}"))
}

fn missing_degrees() -> Outcome {
    let mut t = Tally::default();
    for p in all_deformable() {
        for ell in 1..=3 {
            t.add(check_missing_degrees(ell, &p));
        }
    }
    match t.failure {
        None => Ok(format!("{} spans, degrees below l absent", t.runs)),
        Some(f) => Err(f),
    }
}

fn main() -> ExitCode {
    type Criterion = (&'static str, u64, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        ("difference equation, l = 0, n <= 8", 10, difference_equation),
        ("deformed eigen-identity, l = 1..3, n <= 5", 60, eigen_identity),
        ("shape invariance, l <= 2", 30, shape_invariance),
        ("Rodrigues chain vs closed form, l <= 3, n <= 5", 60, rodrigues),
        ("orthogonality and norms, l <= 2", 120, orthogonality),
        ("zero count, l <= 3, n <= 5", 10, zero_count),
        ("l = 1 hermiticity inequality vs rectangle, 20x20 grids", 300, hermiticity_grid),
        ("l = 0 degeneration", 1, degeneration),
        ("Askey-Wilson to Wilson limit, l <= 2, n <= 2", 60, limit),
        ("missing degrees, l = 1..3", 5, missing_degrees),
    ];
    let mut failed = 0;
    for (k, (title, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(*budget);
        let (ok, detail) = match outcome {
            Ok(d) if in_time => (true, d),
            Ok(d) => (false, format!("{d}; over the time budget")),
            Err(e) => (false, e),
        };
        failed += usize::from(!ok);
        println!(
            "{} {:>2} {title}: {detail} [{:.2} s of {budget} s]",
            if ok { "PASS" } else { "FAIL" },
            k + 1,
            elapsed.as_secs_f64()
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
