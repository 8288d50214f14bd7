//! `xell scan`: the closed-form ℓ = 1 hermiticity inequality against
//! argument-principle certification over a parameter grid.

use clap::Args;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use xell_core::analysis::zero_free_rectangle;
use xell_core::exceptional::hermiticity_l1_margin;
use xell_core::numfield::{format_rat, RealScalar};
use xell_core::{Error, ExactParams, GaussianRational};

use crate::args::{parse_axis, Axis, Format, OutputArgs, ParamArgs};
use crate::output::{document, emit, Table};
use crate::{pool, Failure, Outcome};

#[derive(Args, Debug)]
pub struct ScanArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Grid axis `NAMES=LO:HI:COUNT` with exact endpoints, e.g.
    /// `a1,a2=1/10:19/10:19`; give one or two.
    #[arg(long = "axis", value_parser = parse_axis, required = true)]
    pub axes: Vec<Axis>,
    #[arg(long, default_value_t = 1)]
    pub ell: usize,
    /// Points whose ℓ = 1 margin is within this of zero are not counted as
    /// disagreements.
    #[arg(long, default_value_t = 1e-3)]
    pub boundary: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
enum Verdict {
    Agree,
    Disagree,
    /// Disagreement within the boundary band.
    Boundary,
    Inconclusive,
    /// No closed form to compare with (ℓ ≠ 1).
    Unchecked,
    /// The point lies outside the deformable parameter range.
    Outside,
}

#[derive(Clone, Debug, Serialize)]
struct Row {
    a: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hermiticity_l1: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    margin: Option<String>,
    zero_free: Option<bool>,
    zeros: Option<usize>,
    verdict: Verdict,
}

fn point(args: &ScanArgs, a: [GaussianRational; 4]) -> Result<Row, Error> {
    let strings = a.iter().map(|c| c.to_string()).collect();
    let lambda: Option<ExactParams> = args.params.build(a).ok().filter(|p| p.validate_restricted().is_ok());
    let Some(lambda) = lambda else {
        let none = Row {
            a: strings,
            hermiticity_l1: None,
            margin: None,
            zero_free: None,
            zeros: None,
            verdict: Verdict::Outside,
        };
        return Ok(none);
    };
    let rect = zero_free_rectangle(args.ell, &lambda)?;
    let zero_free = rect.zero_free();
    if args.ell != 1 {
        let verdict = if zero_free.is_some() { Verdict::Unchecked } else { Verdict::Inconclusive };
        return Ok(Row { a: strings, hermiticity_l1: None, margin: None, zero_free, zeros: rect.count, verdict });
    }
    let margin = hermiticity_l1_margin(&lambda);
    let closed = margin > xell_core::Rat::default();
    let verdict = match zero_free {
        None => Verdict::Inconclusive,
        Some(z) if z == closed => Verdict::Agree,
        Some(_) if margin.as_f64().abs() <= args.boundary => Verdict::Boundary,
        Some(_) => Verdict::Disagree,
    };
    Ok(Row {
        a: strings,
        hermiticity_l1: Some(closed),
        margin: Some(format_rat(&margin)),
        zero_free,
        zeros: rect.count,
        verdict,
    })
}

/// Every grid point, first axis slowest.
fn grid(base: [GaussianRational; 4], axes: &[Axis]) -> Vec<[GaussianRational; 4]> {
    let mut points = vec![base];
    for axis in axes {
        points = points
            .iter()
            .flat_map(|p| {
                axis.values.iter().map(move |v| {
                    let mut q = p.clone();
                    for &k in &axis.names {
                        q[k] = v.clone();
                    }
                    q
                })
            })
            .collect();
    }
    points
}

pub fn run(args: &ScanArgs) -> Outcome {
    if args.axes.len() > 2 {
        return Err(Failure::Usage("at most two axes".into()));
    }
    let Some(base) = args.params.a_strings()? else {
        return Err(Failure::Usage("scan needs base parameters --a".into()));
    };
    let base: [GaussianRational; 4] = base
        .iter()
        .map(|t| t.parse::<GaussianRational>().map_err(|e| Failure::Usage(format!("--a: {e}"))))
        .collect::<Result<Vec<_>, _>>()?
        .try_into()
        .expect("four values");
    let points = grid(base, &args.axes);
    if args.axes.iter().any(|a| a.values.is_empty()) {
        return Err(Failure::Usage("empty grid".into()));
    }
    let rows = pool(args.output.jobs)?
        .install(|| points.par_iter().map(|a| point(args, a.clone())).collect::<Result<Vec<Row>, Error>>())?;
    let count = |v: Verdict| rows.iter().filter(|r| r.verdict == v).count();
    let summary = json!({
        "points": rows.len(),
        "agree": count(Verdict::Agree),
        "disagree": count(Verdict::Disagree),
        "boundary": count(Verdict::Boundary),
        "inconclusive": count(Verdict::Inconclusive),
        "outside": count(Verdict::Outside),
    });
    let body = json!({
        "family": args.params.family().name(),
        "ell": args.ell,
        "axes": args.axes.iter().map(|a| a.label.clone()).collect::<Vec<_>>(),
        "summary": summary,
        "rows": rows,
    });
    let opt = |v: Option<String>| v.unwrap_or_default();
    emit(&args.output, Format::Csv, document("scan", body), || Table {
        header: vec!["a1", "a2", "a3", "a4", "hermiticity_l1", "margin", "zero_free", "zeros", "verdict"],
        rows: rows
            .iter()
            .map(|r| {
                let mut cells = r.a.clone();
                cells.push(opt(r.hermiticity_l1.map(|b| b.to_string())));
                cells.push(opt(r.margin.clone()));
                cells.push(opt(r.zero_free.map(|b| b.to_string())));
                cells.push(opt(r.zeros.map(|z| z.to_string())));
                cells.push(
                    serde_json::to_value(r.verdict).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default(),
                );
                cells
            })
            .collect(),
    })?;
    Ok(count(Verdict::Disagree) == 0)
}
