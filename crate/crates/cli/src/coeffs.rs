//! `xell coeffs`, `xell classical` and `xell exceptional`.

use clap::Args;
use rayon::prelude::*;
use serde_json::{json, Value};
use xell_core::classical::NormValue;
use xell_core::exceptional::{exceptional_coeffs, exceptional_poly, norm_h_ell, xi_poly};
use xell_core::numfield::format_rat;
use xell_core::{ExactParams, ExactPoly};

use crate::args::{parse_range, Format, IndexRange, OutputArgs, ParamArgs};
use crate::output::{a_cell, document, emit, report_json, Table};
use crate::verify::{run_checks, Check};
use crate::{pool, Failure, Outcome};

#[derive(Args, Debug)]
pub struct CoeffsArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, value_parser = parse_range, default_value = "0")]
    pub ell: IndexRange,
    #[arg(long, value_parser = parse_range, default_value = "0..3")]
    pub n: IndexRange,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct ClassicalArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, value_parser = parse_range, default_value = "0..5")]
    pub n: IndexRange,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct ExceptionalArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, value_parser = parse_range, default_value = "1..2")]
    pub ell: IndexRange,
    #[arg(long, value_parser = parse_range, default_value = "0..3")]
    pub n: IndexRange,
    #[command(flatten)]
    pub output: OutputArgs,
}

fn coeff_strings(p: &ExactPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn norm_json(v: &NormValue) -> Value {
    match v {
        NormValue::PiTimes(r) => json!({ "pi_times": format_rat(r), "value": v.to_f64() }),
        NormValue::Numeric(x) => json!({ "value": x }),
    }
}

/// One row of the coefficient table.
struct Entry {
    set: usize,
    ell: usize,
    n: usize,
    poly: Vec<String>,
    a1: String,
    a2: String,
    b1: String,
    energy: String,
    norm: Value,
}

fn entry(set: usize, lambda: &ExactParams, ell: usize, n: usize) -> Result<Entry, Failure> {
    let c = exceptional_coeffs(ell, n, lambda)?;
    Ok(Entry {
        set,
        ell,
        n,
        poly: coeff_strings(&exceptional_poly(ell, n, lambda)?),
        a1: c.a1.to_string(),
        a2: c.a2.to_string(),
        b1: c.b1.to_string(),
        energy: lambda.energy_ell(ell, n).to_string(),
        norm: norm_json(&norm_h_ell(ell, n, lambda)),
    })
}

struct Tables {
    sets: Vec<ExactParams>,
    ells: IndexRange,
    entries: Vec<Entry>,
}

fn tables(params: &ParamArgs, ells: &IndexRange, ns: &IndexRange, jobs: usize) -> Result<Tables, Failure> {
    let sets = params.exact(ells.end() > 0)?;
    let tasks: Vec<(usize, usize, usize)> =
        (0..sets.len()).flat_map(|s| ells.iter().flat_map(move |l| ns.iter().map(move |n| (s, l, n)))).collect();
    let entries = pool(jobs)?
        .install(|| tasks.par_iter().map(|&(s, l, n)| entry(s, &sets[s], l, n)).collect::<Result<Vec<_>, Failure>>())?;
    Ok(Tables { sets, ells: ells.clone(), entries })
}

fn tables_json(t: &Tables) -> Value {
    let sets: Vec<Value> = t
        .sets
        .iter()
        .enumerate()
        .map(|(k, lambda)| {
            let xi: Vec<Value> =
                t.ells.iter().map(|l| json!({ "ell": l, "coeffs": coeff_strings(&xi_poly(l, lambda)) })).collect();
            let polys: Vec<Value> = t
                .entries
                .iter()
                .filter(|e| e.set == k)
                .map(|e| {
                    json!({
                        "ell": e.ell,
                        "n": e.n,
                        "coeffs": e.poly,
                        "a1": e.a1,
                        "a2": e.a2,
                        "b1": e.b1,
                        "energy": e.energy,
                        "norm": e.norm,
                    })
                })
                .collect();
            json!({ "params": lambda.summary(), "xi": xi, "polys": polys })
        })
        .collect();
    json!({ "variable": "eta", "order": "ascending", "sets": sets })
}

fn tables_csv(t: &Tables) -> Table {
    let rows = t
        .entries
        .iter()
        .map(|e| {
            let p = t.sets[e.set].summary();
            vec![
                p["family"].as_str().unwrap_or_default().to_string(),
                a_cell(&p),
                p.get("q").and_then(Value::as_str).unwrap_or_default().to_string(),
                e.ell.to_string(),
                e.n.to_string(),
                e.poly.join(" "),
                e.a1.clone(),
                e.a2.clone(),
                e.b1.clone(),
                e.energy.clone(),
                e.norm["value"].to_string(),
            ]
        })
        .collect();
    Table { header: vec!["family", "a", "q", "ell", "n", "coeffs", "a1", "a2", "b1", "energy", "norm"], rows }
}

pub fn run(args: &CoeffsArgs) -> Outcome {
    let t = tables(&args.params, &args.ell, &args.n, args.output.jobs)?;
    emit(&args.output, Format::Json, document("coeffs", tables_json(&t)), || tables_csv(&t))?;
    Ok(true)
}

/// Tables plus the given checks; the exit status follows the checks.
fn tables_and_checks(
    command: &str,
    params: &ParamArgs,
    ells: &IndexRange,
    ns: &IndexRange,
    checks: &[Check],
    output: &OutputArgs,
) -> Outcome {
    let t = tables(params, ells, ns, output.jobs)?;
    let reports = run_checks(&t.sets, ells, ns, checks, &Default::default(), output.jobs)?;
    let passed = reports.iter().all(|r| r.status != xell_core::Status::Fail);
    let mut body = tables_json(&t);
    body["reports"] = reports.iter().map(|r| report_json(r, output.timing)).collect();
    emit(output, Format::Json, document(command, body), || tables_csv(&t))?;
    Ok(passed)
}

pub fn run_classical(args: &ClassicalArgs) -> Outcome {
    let checks = [Check::DifferenceEq, Check::ShapeInvariance, Check::ForwardBackward];
    tables_and_checks("classical", &args.params, &IndexRange(0..=0), &args.n, &checks, &args.output)
}

pub fn run_exceptional(args: &ExceptionalArgs) -> Outcome {
    let checks =
        [Check::Eigencheck, Check::ShapeInvariance, Check::ForwardBackward, Check::Rodrigues, Check::MissingDegrees];
    tables_and_checks("exceptional", &args.params, &args.ell, &args.n, &checks, &args.output)
}
