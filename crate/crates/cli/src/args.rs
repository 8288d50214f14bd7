//! Command-line parsing shared by the subcommands.

use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use num_complex::Complex64;
use xell_core::library::{aw_classical, aw_deformable, wilson_classical, wilson_deformable};
use xell_core::numfield::parse_rat;
use xell_core::polycore::Family;
use xell_core::{ExactParams, GaussianRational, ParamSet, Scalar};

use crate::Failure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Wilson,
    Aw,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Wilson => Family::Wilson,
            FamilyArg::Aw => Family::AskeyWilson,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Inclusive index range `A..B`, `A..=B` or a single `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexRange(pub RangeInclusive<usize>);

impl IndexRange {
    pub fn iter(&self) -> RangeInclusive<usize> {
        self.0.clone()
    }

    pub fn end(&self) -> usize {
        *self.0.end()
    }
}

pub fn parse_range(s: &str) -> Result<IndexRange, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad index {t:?} in range {s:?}"));
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (num(lo)?, num(hi.strip_prefix('=').unwrap_or(hi))?),
        None => {
            let k = num(s)?;
            (k, k)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok(IndexRange(lo..=hi))
}

/// Parameter selection common to every subcommand.
#[derive(Args, Clone, Debug)]
pub struct ParamArgs {
    #[arg(long, value_enum, default_value = "wilson")]
    pub family: FamilyArg,
    /// Four exact parameters `r,r,r,r`, e.g. `1,3/2,2+i,2-i`; the built-in
    /// library is used when omitted.
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    /// Askey-Wilson `q` (exact rational with a rational square root unless
    /// `--s` is given).
    #[arg(long)]
    pub q: Option<String>,
    /// Askey-Wilson `s = √q`.
    #[arg(long)]
    pub s: Option<String>,
}

impl ParamArgs {
    pub fn family(&self) -> Family {
        self.family.into()
    }

    pub fn a_strings(&self) -> Result<Option<[String; 4]>, Failure> {
        let Some(raw) = &self.a else {
            return Ok(None);
        };
        let parts: Vec<String> = raw.split(',').map(|t| t.trim().to_string()).collect();
        let parts: [String; 4] = parts
            .try_into()
            .map_err(|p: Vec<String>| Failure::Usage(format!("--a needs 4 comma-separated values, got {}", p.len())))?;
        Ok(Some(parts))
    }

    /// Exact parameters from the command line, or the library sets: the
    /// deformable ones when `deformed`, otherwise all classical ones.
    pub fn exact(&self, deformed: bool) -> Result<Vec<ExactParams>, Failure> {
        let Some(a) = self.a_strings()? else {
            if self.q.is_some() || self.s.is_some() {
                return Err(Failure::Usage("--q/--s need --a".into()));
            }
            return Ok(match (self.family(), deformed) {
                (Family::Wilson, true) => wilson_deformable(),
                (Family::Wilson, false) => wilson_classical(),
                (Family::AskeyWilson, true) => aw_deformable(),
                (Family::AskeyWilson, false) => aw_classical(),
            });
        };
        let mut parsed = Vec::with_capacity(4);
        for t in &a {
            parsed.push(t.parse::<GaussianRational>().map_err(|e| Failure::Usage(format!("--a: {e}")))?);
        }
        let a: [GaussianRational; 4] = parsed.try_into().expect("four values");
        self.build(a).map(|p| vec![p])
    }

    /// Validated parameters of this family with the given `a`.
    pub fn build(&self, a: [GaussianRational; 4]) -> Result<ExactParams, Failure> {
        let usage = |e: xell_core::Error| Failure::Usage(e.to_string());
        match self.family() {
            Family::Wilson => {
                if self.q.is_some() || self.s.is_some() {
                    return Err(Failure::Usage("--q/--s apply to --family aw only".into()));
                }
                ParamSet::wilson(a).map_err(usage)
            }
            Family::AskeyWilson => {
                let rat = |t: &str, name: &str| parse_rat(t).map_err(|e| Failure::Usage(format!("--{name}: {e}")));
                match (&self.q, &self.s) {
                    (Some(q), Some(s)) => ParamSet::askey_wilson_qs(a, &rat(q, "q")?, &rat(s, "s")?).map_err(usage),
                    (Some(q), None) => ParamSet::askey_wilson_q(a, &rat(q, "q")?).map_err(usage),
                    (None, Some(s)) => ParamSet::askey_wilson(a, GaussianRational::real(rat(s, "s")?)).map_err(usage),
                    (None, None) => Err(Failure::Usage("--family aw needs --q or --s".into())),
                }
            }
        }
    }
}

/// Where and how results are written.
#[derive(Args, Clone, Debug)]
pub struct OutputArgs {
    /// Output format; scans default to CSV, everything else to JSON.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    /// Include wall-clock timings (output is then no longer reproducible).
    #[arg(long)]
    pub timing: bool,
}

/// A complex number given as a decimal (`1.5`), an exact rational or a
/// Gaussian rational (`2+i`).
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t = s.trim();
    if let Ok(v) = t.parse::<f64>() {
        return Ok(Complex64::new(v, 0.0));
    }
    t.parse::<GaussianRational>().map(|g| g.to_c64()).map_err(|e| format!("{s:?}: {e}"))
}

/// An exact grid axis `NAMES=LO:HI:COUNT`, e.g. `a1,a2=1/10:19/10:19`.
#[derive(Clone, Debug)]
pub struct Axis {
    pub names: Vec<usize>,
    pub values: Vec<GaussianRational>,
    pub label: String,
}

pub fn parse_axis(s: &str) -> Result<Axis, String> {
    let (names, spec) = s.split_once('=').ok_or_else(|| format!("axis {s:?} is not NAMES=LO:HI:COUNT"))?;
    let names = names
        .split(',')
        .map(|n| match n.trim() {
            "a1" => Ok(0),
            "a2" => Ok(1),
            "a3" => Ok(2),
            "a4" => Ok(3),
            other => Err(format!("unknown axis parameter {other:?}; expected a1..a4")),
        })
        .collect::<Result<Vec<usize>, String>>()?;
    let parts: Vec<&str> = spec.split(':').collect();
    let [lo, hi, count] = parts[..] else {
        return Err(format!("axis {s:?} is not NAMES=LO:HI:COUNT"));
    };
    let lo = parse_rat(lo).map_err(|e| e.to_string())?;
    let hi = parse_rat(hi).map_err(|e| e.to_string())?;
    let count: usize = count.trim().parse().map_err(|_| format!("bad point count in {s:?}"))?;
    let values = match count {
        0 => Vec::new(),
        1 => vec![lo.clone()],
        _ => {
            let step = (&hi - &lo) / xell_core::Rat::from_integer((count as i64 - 1).into());
            (0..count).map(|k| &lo + &step * xell_core::Rat::from_integer((k as i64).into())).collect()
        }
    };
    Ok(Axis { names, values: values.into_iter().map(GaussianRational::real).collect(), label: s.to_string() })
}
