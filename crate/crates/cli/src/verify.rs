//! `xell verify`: identity checks over a parameter/ℓ/n grid.

use std::time::Instant;

use clap::{Args, ValueEnum};
use rayon::prelude::*;
use serde_json::json;
use xell_core::analysis::{check_orthogonality, count_real_zeros, zero_free_rectangle, QuadratureConfig};
use xell_core::classical::{check_difference_eq, check_shape_invariance};
use xell_core::exceptional::{
    check_forward_backward, check_missing_degrees, check_rodrigues, check_shape_invariance_ell, exceptional_poly,
    hermiticity_l1, hermiticity_l1_margin, htilde_eigencheck, htilde_residual,
};
use xell_core::numfield::{format_rat, RealScalar};
use xell_core::polycore::Poly;
use xell_core::{Error, ExactParams, GaussianRational, Residual, Status, VerificationReport};

use crate::args::{parse_range, Format, IndexRange, OutputArgs, ParamArgs};
use crate::output::{document, emit, report_json, report_table};
use crate::{pool, Failure, Outcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Check {
    DifferenceEq,
    ShapeInvariance,
    ForwardBackward,
    Rodrigues,
    Eigencheck,
    ZeroCount,
    Hermiticity,
    Orthogonality,
    MissingDegrees,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, value_parser = parse_range, default_value = "0..2")]
    pub ell: IndexRange,
    #[arg(long, value_parser = parse_range, default_value = "0..4")]
    pub n: IndexRange,
    /// Comma-separated checks; all of them when omitted.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub checks: Vec<Check>,
    /// Acceptance for the orthogonality check (relative).
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    /// Negative control: add 1 to the constant term of every P_{ℓ,n} before
    /// the eigen-identity check.
    #[arg(long)]
    pub corrupt: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub tol: f64,
    pub quadrature: QuadratureConfig,
    pub corrupt: bool,
    /// `ℓ = 1` disagreements with `|margin|` at most this are not failures.
    pub boundary: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { tol: 1e-8, quadrature: QuadratureConfig::default(), corrupt: false, boundary: 1e-3 }
    }
}

/// One unit of work: a check at one parameter set, `ℓ` and (where it
/// applies) `n`.
#[derive(Clone, Copy, Debug)]
struct Task {
    set: usize,
    check: Check,
    ell: usize,
    n: Option<usize>,
}

fn plan(sets: usize, ells: &IndexRange, ns: &IndexRange, checks: &[Check]) -> Vec<Task> {
    let mut tasks = Vec::new();
    for set in 0..sets {
        for &check in checks {
            for ell in ells.iter() {
                let per_n = match check {
                    Check::DifferenceEq if ell == 0 => true,
                    Check::DifferenceEq => continue,
                    Check::ForwardBackward | Check::Rodrigues | Check::Eigencheck | Check::ZeroCount => true,
                    Check::Hermiticity | Check::MissingDegrees if ell == 0 => continue,
                    Check::ShapeInvariance | Check::Hermiticity | Check::Orthogonality | Check::MissingDegrees => false,
                };
                if per_n {
                    tasks.extend(ns.iter().map(|n| Task { set, check, ell, n: Some(n) }));
                } else {
                    tasks.push(Task { set, check, ell, n: None });
                }
            }
        }
    }
    tasks
}

fn params_of(lambda: &ExactParams, ell: usize, n: Option<usize>) -> serde_json::Value {
    let mut p = lambda.summary();
    p["ell"] = ell.into();
    if let Some(n) = n {
        p["n"] = n.into();
    }
    p
}

fn report(
    check: &str,
    params: serde_json::Value,
    status: Status,
    residual: Option<Residual>,
    detail: String,
    start: Instant,
) -> VerificationReport {
    VerificationReport {
        check: check.into(),
        params,
        status,
        residual,
        detail: Some(detail),
        runtime_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

/// `Some(true)` when `ξ_ℓ` is certified zero-free on the rectangle.
fn certified(ell: usize, lambda: &ExactParams) -> Result<Option<bool>, Error> {
    if ell == 0 {
        return Ok(Some(true));
    }
    Ok(zero_free_rectangle(ell, lambda)?.zero_free())
}

fn corrupted_eigencheck(ell: usize, n: usize, lambda: &ExactParams) -> Result<VerificationReport, Error> {
    let start = Instant::now();
    let p = exceptional_poly(ell, n, lambda)?;
    let bump = Poly::constant(p.var(), GaussianRational::from(1));
    let r = htilde_residual(ell, lambda, &(&p + &bump), &lambda.energy_ell(ell, n))?;
    let (status, residual) =
        if r.is_zero() { (Status::Pass, None) } else { (Status::Fail, Some(Residual::from_ratfunc(&r))) };
    Ok(report("deformed_eigen_identity", params_of(lambda, ell, Some(n)), status, residual, "corrupted".into(), start))
}

fn zero_count(ell: usize, n: usize, lambda: &ExactParams) -> Result<VerificationReport, Error> {
    let start = Instant::now();
    let zeros = count_real_zeros(ell, n, lambda)?;
    let status = match (zeros == n, certified(ell, lambda)?) {
        (true, _) => Status::Pass,
        (false, Some(true)) => Status::Fail,
        (false, _) => Status::Inconclusive,
    };
    let detail = format!("{zeros} zeros in the domain");
    let residual = (zeros != n).then_some(Residual::Numeric { value: zeros as f64 });
    Ok(report("zero_count", params_of(lambda, ell, Some(n)), status, residual, detail, start))
}

fn hermiticity(ell: usize, lambda: &ExactParams, cfg: &VerifyConfig) -> Result<VerificationReport, Error> {
    let start = Instant::now();
    let rect = zero_free_rectangle(ell, lambda)?;
    let params = params_of(lambda, ell, None);
    let numeric = match rect.zero_free() {
        None => "inconclusive".to_string(),
        Some(true) => "zero-free".to_string(),
        Some(false) => format!("{} zeros", rect.count.unwrap_or(0)),
    };
    if ell != 1 {
        let status = if rect.count.is_some() { Status::Pass } else { Status::Inconclusive };
        return Ok(report("hermiticity", params, status, None, format!("rectangle {numeric}"), start));
    }
    let closed = hermiticity_l1(lambda);
    let margin = hermiticity_l1_margin(lambda);
    let near = margin.as_f64().abs() <= cfg.boundary;
    let status = match rect.zero_free() {
        None => Status::Inconclusive,
        Some(z) if z == closed => Status::Pass,
        Some(_) if near => Status::Inconclusive,
        Some(_) => Status::Fail,
    };
    let detail = format!("inequality {closed} (margin {}), rectangle {numeric}", format_rat(&margin));
    Ok(report("hermiticity", params, status, None, detail, start))
}

fn orthogonality(
    ell: usize,
    ns: &IndexRange,
    lambda: &ExactParams,
    cfg: &VerifyConfig,
) -> Result<VerificationReport, Error> {
    let start = Instant::now();
    if certified(ell, lambda)? != Some(true) {
        let params = params_of(lambda, ell, None);
        return Ok(report("orthogonality", params, Status::Inconclusive, None, "weight not certified".into(), start));
    }
    check_orthogonality(ell, ns.end(), lambda, &cfg.quadrature, cfg.tol)
}

fn run_task(t: &Task, lambda: &ExactParams, ns: &IndexRange, cfg: &VerifyConfig) -> Result<VerificationReport, Error> {
    let n = t.n.unwrap_or(0);
    match t.check {
        Check::DifferenceEq => Ok(check_difference_eq(n, lambda)),
        Check::ShapeInvariance if t.ell == 0 => Ok(check_shape_invariance(lambda)),
        Check::ShapeInvariance => check_shape_invariance_ell(t.ell, lambda),
        Check::ForwardBackward => check_forward_backward(t.ell, n, lambda),
        Check::Rodrigues => check_rodrigues(t.ell, n, lambda),
        Check::Eigencheck if cfg.corrupt => corrupted_eigencheck(t.ell, n, lambda),
        Check::Eigencheck => htilde_eigencheck(t.ell, n, lambda),
        Check::ZeroCount => zero_count(t.ell, n, lambda),
        Check::Hermiticity => hermiticity(t.ell, lambda, cfg),
        Check::Orthogonality => orthogonality(t.ell, ns, lambda, cfg),
        Check::MissingDegrees => check_missing_degrees(t.ell, lambda),
    }
}

/// Runs `checks` over the grid on `jobs` workers; reports come back in
/// grid order whatever the scheduling. A degenerate parameter set aborts
/// the run; any other error becomes a failed report.
pub fn run_checks(
    sets: &[ExactParams],
    ells: &IndexRange,
    ns: &IndexRange,
    checks: &[Check],
    cfg: &VerifyConfig,
    jobs: usize,
) -> Result<Vec<VerificationReport>, Failure> {
    let tasks = plan(sets.len(), ells, ns, checks);
    pool(jobs)?.install(|| {
        tasks
            .par_iter()
            .map(|t| {
                let lambda = &sets[t.set];
                match run_task(t, lambda, ns, cfg) {
                    Ok(r) => Ok(r),
                    Err(e @ Error::Degenerate(_)) => Err(Failure::from(e)),
                    Err(e) => Ok(VerificationReport {
                        check: t.check.to_possible_value().map(|v| v.get_name().replace('-', "_")).unwrap_or_default(),
                        params: params_of(lambda, t.ell, t.n),
                        status: Status::Fail,
                        residual: None,
                        detail: Some(e.to_string()),
                        runtime_ms: 0.0,
                    }),
                }
            })
            .collect()
    })
}

pub fn run(args: &VerifyArgs) -> Outcome {
    if args.tol.is_nan() || args.tol <= 0.0 {
        return Err(Failure::Usage(format!("--tol must be positive, got {}", args.tol)));
    }
    let sets = args.params.exact(args.ell.end() > 0)?;
    let mut checks = if args.checks.is_empty() { Check::value_variants().to_vec() } else { args.checks.clone() };
    checks.sort();
    checks.dedup();
    let cfg = VerifyConfig { tol: args.tol, corrupt: args.corrupt, ..VerifyConfig::default() };
    let reports = run_checks(&sets, &args.ell, &args.n, &checks, &cfg, args.output.jobs)?;
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    let (pass, fail, inconclusive) = (count(Status::Pass), count(Status::Fail), count(Status::Inconclusive));
    let body = json!({
        "summary": { "pass": pass, "fail": fail, "inconclusive": inconclusive },
        "reports": reports.iter().map(|r| report_json(r, args.output.timing)).collect::<Vec<_>>(),
    });
    emit(&args.output, Format::Json, document("verify", body), || report_table(&reports))?;
    Ok(fail == 0)
}
