//! Structured pass/fail records for identity checks.

use std::time::Instant;

use serde::Serialize;

use crate::numfield::Scalar;
use crate::polycore::{Poly, RatFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

/// What was left over when an identity was checked.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Residual {
    /// Exact numerator of the residual, coefficients from degree 0 upward.
    Polynomial {
        var: String,
        coeffs: Vec<String>,
    },
    Numeric {
        value: f64,
    },
}

impl Residual {
    pub fn from_poly<T: Scalar>(p: &Poly<T>) -> Self {
        Residual::Polynomial {
            var: format!("{:?}", p.var()).to_lowercase(),
            coeffs: p.coeffs().iter().map(|c| format!("{c:?}")).collect(),
        }
    }

    /// The numerator of `r`; its vanishing is what every exact check tests.
    pub fn from_ratfunc<T: Scalar>(r: &RatFunc<T>) -> Self {
        Self::from_poly(r.num())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub params: serde_json::Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<Residual>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub runtime_ms: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

/// Times a check and assembles its report.
pub(crate) struct Timer {
    start: Instant,
}

impl Timer {
    pub fn start() -> Self {
        Self { start: Instant::now() }
    }

    pub fn finish(
        self,
        check: &str,
        params: serde_json::Value,
        status: Status,
        residual: Option<Residual>,
    ) -> VerificationReport {
        VerificationReport {
            check: check.to_string(),
            params,
            status,
            residual,
            detail: None,
            runtime_ms: self.start.elapsed().as_secs_f64() * 1e3,
        }
    }

    /// Pass iff `r` is identically zero; otherwise the residual numerator is
    /// attached.
    pub fn exact<T: Scalar>(self, check: &str, params: serde_json::Value, r: &RatFunc<T>) -> VerificationReport {
        if r.is_zero() {
            self.finish(check, params, Status::Pass, None)
        } else {
            self.finish(check, params, Status::Fail, Some(Residual::from_ratfunc(r)))
        }
    }
}
