//! Reference parameter sets used by the test suites and as CLI defaults.

use crate::classical::ParamSet;
use crate::numfield::{parse_rat, GaussianRational};
use crate::ExactParams;

fn parse4(a: [&str; 4]) -> [GaussianRational; 4] {
    a.map(|s| s.parse().expect("library literal"))
}

fn wilson(a: [&str; 4]) -> ExactParams {
    ParamSet::wilson(parse4(a)).expect("library parameters are valid")
}

fn aw(a: [&str; 4], q: &str) -> ExactParams {
    ParamSet::askey_wilson_q(parse4(a), &parse_rat(q).unwrap()).expect("library parameters are valid")
}

/// Wilson parameters inside the deformable range: two real, one
/// complex-conjugate pair.
pub fn wilson_deformable() -> Vec<ExactParams> {
    vec![wilson(["1", "1", "2", "2"]), wilson(["1", "3/2", "2", "5/2"]), wilson(["1", "1", "2+i", "2-i"])]
}

/// Askey-Wilson parameters at `q = 1/4` inside the deformable range.
pub fn aw_deformable() -> Vec<ExactParams> {
    vec![
        aw(["3/4", "3/4", "1/4", "1/4"], "1/4"),
        aw(["1/2", "3/4", "3/8", "3/8"], "1/4"),
        aw(["3/4", "1/2", "1/4+1/4*i", "1/4-1/4*i"], "1/4"),
    ]
}

/// Six Wilson parameter sets for the undeformed system.
pub fn wilson_classical() -> Vec<ExactParams> {
    let mut v = wilson_deformable();
    v.extend([
        wilson(["1", "1", "1", "1"]),
        wilson(["1/2", "3/4", "3/2", "5/3"]),
        wilson(["1/3", "2", "1/2+3/2*i", "1/2-3/2*i"]),
    ]);
    v
}

/// Six Askey-Wilson parameter sets for the undeformed system, over two
/// values of `q`.
pub fn aw_classical() -> Vec<ExactParams> {
    let mut v = aw_deformable();
    v.extend([
        aw(["1/2", "1/2", "1/2", "1/2"], "1/4"),
        aw(["1/2", "1/2", "1/4", "1/4"], "1/4"),
        aw(["1/3", "-1/4", "1/5+2/5*i", "1/5-2/5*i"], "4/9"),
    ]);
    v
}
