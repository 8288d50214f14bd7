//! `xell limit`: Askey-Wilson → Wilson limit sweep.

use clap::Args;
use num_complex::Complex64;
use rayon::prelude::*;
use serde_json::json;
use xell_core::analysis::{check_limit, LimitConfig, LimitTable, Precision};
use xell_core::{FloatParams, ParamSet, VerificationReport};

use crate::args::{parse_complex, parse_range, Format, IndexRange, OutputArgs};
use crate::output::{document, emit, report_json, Table};
use crate::{pool, Failure, Outcome};

#[derive(Args, Debug)]
pub struct LimitArgs {
    /// Wilson parameters; decimals are accepted here.
    #[arg(long, value_delimiter = ',', value_parser = parse_complex, default_value = "1,1,2,2", allow_hyphen_values = true)]
    pub a: Vec<Complex64>,
    #[arg(long, value_parser = parse_range, default_value = "0..2")]
    pub ell: IndexRange,
    #[arg(long, value_parser = parse_range, default_value = "0..2")]
    pub n: IndexRange,
    /// Increasing values of `L`, with `q = e^{−π/L}`.
    #[arg(long = "L", value_delimiter = ',', default_value = "20,40,80,160")]
    pub ls: Vec<f64>,
    /// Required shrink of the deviation per step in `L`.
    #[arg(long, default_value_t = 1.5)]
    pub factor: f64,
    /// Double-double arithmetic.
    #[arg(long)]
    pub extended: bool,
    /// Negative control: shift every scaling exponent by this.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub exponent_offset: i32,
    #[command(flatten)]
    pub output: OutputArgs,
}

pub fn run(args: &LimitArgs) -> Outcome {
    let a: [Complex64; 4] = args
        .a
        .clone()
        .try_into()
        .map_err(|v: Vec<Complex64>| Failure::Usage(format!("--a needs 4 values, got {}", v.len())))?;
    let wilson: FloatParams = ParamSet::wilson(a)?;
    let cfg = LimitConfig {
        exponent_offset: args.exponent_offset,
        precision: if args.extended { Precision::Extended } else { Precision::Double },
        ..LimitConfig::default()
    };
    let tasks: Vec<(usize, usize)> = args.ell.iter().flat_map(|l| args.n.iter().map(move |n| (l, n))).collect();
    let results = pool(args.output.jobs)?.install(|| {
        tasks
            .par_iter()
            .map(|&(l, n)| check_limit(l, n, &wilson, &args.ls, &cfg, args.factor))
            .collect::<Result<Vec<(VerificationReport, LimitTable)>, _>>()
    })?;
    let passed = results.iter().all(|(r, _)| r.passed());
    let body = json!({
        "factor": args.factor,
        "tables": results.iter().map(|(_, t)| t).collect::<Vec<_>>(),
        "reports": results.iter().map(|(r, _)| report_json(r, args.output.timing)).collect::<Vec<_>>(),
    });
    emit(&args.output, Format::Json, document("limit", body), || Table {
        header: vec!["ell", "n", "L", "q", "xi", "poly", "potential"],
        rows: results
            .iter()
            .flat_map(|(_, t)| {
                t.rows.iter().map(move |r| {
                    vec![
                        t.ell.to_string(),
                        t.n.to_string(),
                        r.l.to_string(),
                        format!("{:e}", r.q),
                        format!("{:e}", r.xi),
                        format!("{:e}", r.poly),
                        format!("{:e}", r.potential),
                    ]
                })
            })
            .collect(),
    })?;
    Ok(passed)
}
