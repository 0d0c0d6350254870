//! Original-versus-truth audit records.

use num_complex::Complex;
use serde::Serialize;

use super::output::{ComplexValue, Num, ParamsOut, ReportOut};
use crate::conditions::build_report;
use crate::error::Error;
use crate::formulas::{eval_improved, eval_original, Kind};
use crate::params::RealParams;
use crate::quadrature::{oracle_cos, oracle_f, oracle_sin};
use crate::verify::Tolerance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// The original formula matches the oracle.
    Agree,
    /// The original formula matches the negated oracle value.
    SignFlip,
    /// `Y = 0`: the original formula has no value.
    OriginalInapplicable,
    /// Neither; should not happen.
    Mismatch,
    /// A numerical error prevented the comparison; see `error`.
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditRecord {
    pub params: ParamsOut,
    pub kind: &'static str,
    pub report: ReportOut,
    pub original: Option<ComplexValue>,
    pub improved: Option<ComplexValue>,
    pub oracle: Option<ComplexValue>,
    /// `|original − oracle|`, or `|improved − oracle|` where the original is
    /// inapplicable.
    pub abs_discrepancy: Option<Num>,
    pub verdict: Verdict,
    pub detail: Option<String>,
    pub error: Option<String>,
}

fn oracle_value(params: &RealParams<f64>, kind: Kind) -> Result<Complex<f64>, Error> {
    let cp = params.to_complex();
    let r = match kind {
        Kind::Sin => oracle_sin(&cp)?,
        Kind::Cos => oracle_cos(&cp)?,
        Kind::F => oracle_f(&cp)?,
    };
    Ok(r.value)
}

pub fn audit_point(params: &RealParams<f64>, kind: Kind, tol: Tolerance) -> AuditRecord {
    let report = build_report(params);
    let mut record = AuditRecord {
        params: ParamsOut {
            p: Complex::new(params.p, 0.0).into(),
            q: Complex::new(params.q, 0.0).into(),
            a: Complex::new(params.a, 0.0).into(),
            b: Complex::new(params.b, 0.0).into(),
            m: params.m,
        },
        kind: kind.as_str(),
        report: report.into(),
        original: None,
        improved: None,
        oracle: None,
        abs_discrepancy: None,
        verdict: Verdict::Error,
        detail: None,
        error: None,
    };
    let (truth, improved) = match (oracle_value(params, kind), eval_improved(params, kind)) {
        (Ok(t), Ok(i)) => (t, i.value),
        (Err(e), _) | (_, Err(e)) => {
            record.error = Some(e.to_string());
            return record;
        }
    };
    record.oracle = Some(truth.into());
    record.improved = Some(improved.into());

    let original = match eval_original(params, kind) {
        Ok(r) => r.value,
        Err(Error::YIsZero) => {
            record.verdict = Verdict::OriginalInapplicable;
            record.abs_discrepancy = Some(Num((improved - truth).norm()));
            record.detail = Some("Y = 0; discrepancy is improved vs oracle".to_string());
            return record;
        }
        Err(e) => {
            record.error = Some(e.to_string());
            return record;
        }
    };
    record.original = Some(original.into());
    record.abs_discrepancy = Some(Num((original - truth).norm()));
    record.verdict = if tol.accepts(original, truth) {
        if report.flip_applies {
            record.detail = Some("sign error predicted, but the component vanishes".to_string());
        }
        Verdict::Agree
    } else if tol.accepts(-original, truth) {
        if !report.flip_applies {
            record.detail = Some("sign flip not predicted by the conditions".to_string());
        }
        Verdict::SignFlip
    } else {
        Verdict::Mismatch
    };
    record
}
