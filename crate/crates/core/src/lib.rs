//! Closed forms, sign-error predicates and a quadrature oracle for
//!
//! ```text
//! ∫₀^{2π} exp(p cos x + q sin x) {sin, cos}(a cos x + b sin x − m x) dx
//! ```
//!
//! The numerical core is generic over [`scalar::Real`] (`f32` or `f64`);
//! the `*64` aliases below fix it to `f64`.

pub mod catalog;
pub mod cli;
pub mod complex;
pub mod conditions;
pub mod eft;
pub mod error;
pub mod formulas;
pub mod params;
pub mod quadrature;
pub mod scalar;
pub mod special;
pub mod verify;

pub use error::{Error, Result};
pub use formulas::{EvalResult, Kind, Method};
pub use num_complex::Complex;
pub use params::{ComplexParams, RealParams};

pub type Complex64 = Complex<f64>;
pub type Complex32 = Complex<f32>;
pub type RealParams64 = RealParams<f64>;
pub type RealParams32 = RealParams<f32>;
pub type ComplexParams64 = ComplexParams<f64>;
pub type ComplexParams32 = ComplexParams<f32>;
pub type SignErrorReport64 = conditions::SignErrorReport<f64>;
