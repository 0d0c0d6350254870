//! Machine-readable output: complex numbers as `{"re": …, "im": …}` with
//! 17 significant digits, so every binary64 value round-trips exactly.

use num_complex::Complex;
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

use crate::conditions::SignErrorReport;

/// A float written with 17 significant digits; non-finite values become
/// `null`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Num(pub f64);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return serializer.serialize_none();
        }
        let raw =
            RawValue::from_string(format!("{:.16e}", self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(serializer)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComplexValue {
    pub re: Num,
    pub im: Num,
}

impl From<Complex<f64>> for ComplexValue {
    fn from(z: Complex<f64>) -> Self {
        ComplexValue {
            re: Num(z.re),
            im: Num(z.im),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ParamsOut {
    pub p: ComplexValue,
    pub q: ComplexValue,
    pub a: ComplexValue,
    pub b: ComplexValue,
    pub m: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReportOut {
    pub case1: bool,
    pub case2: bool,
    pub case3: bool,
    pub k_constant: Num,
    pub overall: bool,
    pub flip_applies: bool,
    pub y_is_zero: bool,
    pub boundary: bool,
}

impl From<SignErrorReport<f64>> for ReportOut {
    fn from(r: SignErrorReport<f64>) -> Self {
        ReportOut {
            case1: r.case1,
            case2: r.case2,
            case3: r.case3,
            k_constant: Num(r.k_constant),
            overall: r.overall,
            flip_applies: r.flip_applies,
            y_is_zero: r.y_is_zero,
            boundary: r.boundary,
        }
    }
}

pub fn to_json_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output types serialise")
}
