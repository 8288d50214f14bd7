//! `xell`: coefficient tables, identity checks, hermiticity scans and limit
//! sweeps for the Wilson and Askey-Wilson exceptional polynomials.

mod args;
mod coeffs;
mod limit;
mod ortho;
mod output;
mod scan;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "xell", version, about = "Exceptional Wilson and Askey-Wilson polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Coefficient tables of ξ_ℓ, P_{ℓ,n}, the coefficient triples, E_{ℓ,n} and h_{ℓ,n}.
    Coeffs(coeffs::CoeffsArgs),
    /// Run identity checks over a parameter/ℓ/n grid.
    Verify(verify::VerifyArgs),
    /// Compare the ℓ = 1 hermiticity inequality with zero-free certification on a grid.
    Scan(scan::ScanArgs),
    /// Askey-Wilson to Wilson limit sweep.
    Limit(limit::LimitArgs),
    /// Gram matrix of P_{ℓ,0..N} by quadrature, against the closed-form norms.
    Ortho(ortho::OrthoArgs),
    /// Classical tables and checks (coeffs and verify at ℓ = 0).
    Classical(coeffs::ClassicalArgs),
    /// Exceptional tables together with the exact checks.
    Exceptional(coeffs::ExceptionalArgs),
}

/// Why a command stopped short of a clean run.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Degenerate(String),
    Other(String),
}

impl From<xell_core::Error> for Failure {
    fn from(e: xell_core::Error) -> Self {
        use xell_core::Error as E;
        match e {
            E::Parse(_) | E::InvalidParams(_) => Failure::Usage(e.to_string()),
            E::Degenerate(_) => Failure::Degenerate(e.to_string()),
            _ => Failure::Other(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Other(e.to_string())
    }
}

/// Run result: whether every check passed.
pub type Outcome = Result<bool, Failure>;

/// A worker pool of `jobs` threads (0 for the default).
pub fn pool(jobs: usize) -> Result<rayon::ThreadPool, Failure> {
    rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(|e| Failure::Other(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Coeffs(a) => coeffs::run(&a),
        Command::Verify(a) => verify::run(&a),
        Command::Scan(a) => scan::run(&a),
        Command::Limit(a) => limit::run(&a),
        Command::Ortho(a) => ortho::run(&a),
        Command::Classical(a) => coeffs::run_classical(&a),
        Command::Exceptional(a) => coeffs::run_exceptional(&a),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("xell: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Degenerate(m)) => {
            eprintln!("xell: {m}");
            ExitCode::from(3)
        }
        Err(Failure::Other(m)) => {
            eprintln!("xell: {m}");
            ExitCode::from(1)
        }
    }
}
