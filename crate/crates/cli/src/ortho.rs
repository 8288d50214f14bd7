//! `xell ortho`: Gram matrices by quadrature.

use clap::Args;
use rayon::prelude::*;
use serde_json::json;
use xell_core::analysis::{gram_matrix, QuadratureConfig};
use xell_core::exceptional::norm_h_ell;

use crate::args::{parse_range, Format, IndexRange, OutputArgs, ParamArgs};
use crate::output::{a_cell, document, emit, Table};
use crate::{pool, Failure, Outcome};

#[derive(Args, Debug)]
pub struct OrthoArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, value_parser = parse_range, default_value = "0..2")]
    pub ell: IndexRange,
    /// Largest degree index `N`; the matrix is `(N+1)×(N+1)`.
    #[arg(long, default_value_t = 4)]
    pub max_n: usize,
    /// Acceptance, relative to `√(h_n h_m)`.
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    /// Quadrature target error.
    #[arg(long, default_value_t = 1e-10)]
    pub quad_tol: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

struct Gram {
    set: usize,
    ell: usize,
    matrix: Vec<Vec<f64>>,
    norms: Vec<f64>,
    diagonal: f64,
    off_diagonal: f64,
}

pub fn run(args: &OrthoArgs) -> Outcome {
    if args.tol.is_nan() || args.tol <= 0.0 {
        return Err(Failure::Usage(format!("--tol must be positive, got {}", args.tol)));
    }
    let cfg = QuadratureConfig { tol: args.quad_tol, ..QuadratureConfig::default() };
    cfg.validate()?;
    let sets = args.params.exact(args.ell.end() > 0)?;
    let tasks: Vec<(usize, usize)> = (0..sets.len()).flat_map(|s| args.ell.iter().map(move |l| (s, l))).collect();
    let grams = pool(args.output.jobs)?.install(|| {
        tasks
            .par_iter()
            .map(|&(set, ell)| {
                let lambda = &sets[set];
                let matrix = gram_matrix(ell, args.max_n, lambda, &cfg)?;
                let norms: Vec<f64> = (0..=args.max_n).map(|n| norm_h_ell(ell, n, lambda).to_f64()).collect();
                let mut diagonal: f64 = 0.0;
                let mut off_diagonal: f64 = 0.0;
                for n in 0..=args.max_n {
                    diagonal = diagonal.max(((matrix[n][n] - norms[n]) / norms[n]).abs());
                    for m in 0..n {
                        off_diagonal = off_diagonal.max(matrix[n][m].abs() / (norms[n] * norms[m]).sqrt());
                    }
                }
                Ok(Gram { set, ell, matrix, norms, diagonal, off_diagonal })
            })
            .collect::<Result<Vec<Gram>, xell_core::Error>>()
    })?;
    let passed = grams.iter().all(|g| g.diagonal <= args.tol && g.off_diagonal <= args.tol);
    let body = json!({
        "tol": args.tol,
        "results": grams.iter().map(|g| json!({
            "params": sets[g.set].summary(),
            "ell": g.ell,
            "gram": g.matrix,
            "norms": g.norms,
            "diagonal_deviation": g.diagonal,
            "off_diagonal_deviation": g.off_diagonal,
            "status": if g.diagonal <= args.tol && g.off_diagonal <= args.tol { "pass" } else { "fail" },
        })).collect::<Vec<_>>(),
    });
    emit(&args.output, Format::Json, document("ortho", body), || Table {
        header: vec!["family", "a", "ell", "n", "m", "gram", "norm"],
        rows: grams
            .iter()
            .flat_map(|g| {
                let p = sets[g.set].summary();
                (0..=args.max_n).flat_map(move |n| {
                    let p = p.clone();
                    (0..=args.max_n).map(move |m| {
                        vec![
                            p["family"].as_str().unwrap_or_default().to_string(),
                            a_cell(&p),
                            g.ell.to_string(),
                            n.to_string(),
                            m.to_string(),
                            format!("{:e}", g.matrix[n][m]),
                            if n == m { format!("{:e}", g.norms[n]) } else { String::new() },
                        ]
                    })
                })
            })
            .collect(),
    })?;
    Ok(passed)
}
