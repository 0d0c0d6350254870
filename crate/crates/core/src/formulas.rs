//! Closed-form evaluators.
//!
//! * The *original* evaluators compute the table formulas through the
//!   Bessel form `f = 2π N^{-m/2} (A - iB)^{m/2} I_m(√(C + iD))`,
//!   `N = (b-p)² + (a+q)²`, with principal powers throughout, and so
//!   reproduce the table's sign error wherever it occurs.
//! * The *corrected* evaluators apply the `(-1)^m` repair to the original
//!   ones under [`overall_sign_error`].
//! * The *improved* evaluators use `f = 2π X^m/m! · ₀F₁(;m+1; XY)`, which
//!   contains no fractional powers at all and needs no `Y ≠ 0` restriction.
//! * The *complex* evaluators split the sine and cosine integrals into two
//!   exponential integrals `f₁`, `f₂` whose constants are built from the real
//!   and imaginary parts of the (complex) parameters.

use num_complex::Complex;

use crate::complex::{cpow_half, principal_sqrt};
use crate::conditions::overall_sign_error;
use crate::error::{Error, Result};
use crate::params::{ComplexParams, RealParams};
use crate::scalar::Real;
use crate::special::{bessel_i, hyp0f1, SeriesResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    OriginalBessel,
    CorrectedBessel,
    Hyp0F1Real,
    Hyp0F1Complex,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::OriginalBessel => "OriginalBessel",
            Method::CorrectedBessel => "CorrectedBessel",
            Method::Hyp0F1Real => "Hyp0F1Real",
            Method::Hyp0F1Complex => "Hyp0F1Complex",
        }
    }
}

/// Which integral of the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Sin,
    Cos,
    /// The exponential integral `f = cos-integral + i·sin-integral`.
    F,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Sin => "sin",
            Kind::Cos => "cos",
            Kind::F => "f",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult<T> {
    pub value: Complex<T>,
    pub method: Method,
    /// Series terms summed, over all series involved.
    pub terms_used: usize,
    /// Bound on the contribution of the omitted series terms to `value`.
    pub truncation_estimate: T,
    /// `value` before any imaginary residue of a real-valued result was
    /// clamped away.
    pub raw: Complex<T>,
}

impl<T: Real> EvalResult<T> {
    fn new(value: Complex<T>, method: Method, terms_used: usize, truncation_estimate: T) -> Self {
        Self {
            value,
            method,
            terms_used,
            truncation_estimate,
            raw: value,
        }
    }

    fn map(self, f: impl Fn(Complex<T>) -> Complex<T>) -> Self {
        let value = f(self.value);
        Self {
            value,
            raw: value,
            ..self
        }
    }

    /// Keeps only the real part, failing if the discarded imaginary part is
    /// larger than rounding can explain.
    fn clamp_real(self) -> Result<Self> {
        let tolerance = T::residue_tol() * T::one().max(self.raw.norm());
        if self.raw.im.abs() > tolerance {
            return Err(Error::ImaginaryResidue {
                residue: self.raw.im.to_f64_lossy(),
                tolerance: tolerance.to_f64_lossy(),
            });
        }
        Ok(Self {
            value: Complex::new(self.raw.re, T::zero()),
            ..self
        })
    }
}

fn real<T: Real>(x: T) -> Complex<T> {
    Complex::new(x, T::zero())
}

fn imag<T: Real>(x: T) -> Complex<T> {
    Complex::new(T::zero(), x)
}

/// `z^m / m!` as a running product, so neither factor overflows on its own.
/// The empty product gives `0^0/0! = 1`.
pub(crate) fn power_over_factorial<T: Real>(z: Complex<T>, m: u32) -> Complex<T> {
    (1..=m).fold(real(T::one()), |acc, j| acc * z / T::of_u32(j))
}

/// `z^m/m! · ₀F₁(;m+1; w)`.
fn hyp_term<T: Real>(
    z: Complex<T>,
    w: Complex<T>,
    m: u32,
) -> Result<(Complex<T>, SeriesResult<T>)> {
    let pre = power_over_factorial(z, m);
    let series = hyp0f1(m + 1, w)?;
    Ok((pre * series.value, series))
}

/// `π[u ∓ v]` scaled by `i` for the sine: `iπ(u - v)` or `π(u + v)`.
fn combine<T: Real>(kind: Kind, u: Complex<T>, v: Complex<T>) -> Complex<T> {
    let pi = T::PI();
    match kind {
        Kind::Sin => imag(pi) * (u - v),
        _ => real(pi) * (u + v),
    }
}

fn check_real_kind(kind: Kind) {
    debug_assert!(kind != Kind::F, "use the f evaluator");
}

// ---------------------------------------------------------------------------
// Original (Bessel) form

/// The exponential integral `f` through the Bessel form, principal branches
/// throughout. Carries the table's sign error.
pub fn eval_f_bessel<T: Real>(params: &RealParams<T>) -> Result<EvalResult<T>> {
    params.validate()?;
    if params.y_is_zero() || params.y_norm_sqr() <= T::zero() {
        return Err(Error::YIsZero);
    }
    let m = params.m;
    let k = params.original_constants();
    let n_pow = T::one() / params.y_norm_sqr().sqrt().powi(m as i32);
    let base = cpow_half(Complex::new(k.a, -k.b), m)?;
    let series = bessel_i(m, principal_sqrt(Complex::new(k.c, k.d)))?;
    let pre = real(T::TAU() * n_pow) * base;
    Ok(EvalResult::new(
        pre * series.value,
        Method::OriginalBessel,
        series.terms_used,
        pre.norm() * series.truncation_estimate,
    ))
}

fn original_component<T: Real>(params: &RealParams<T>, kind: Kind) -> Result<EvalResult<T>> {
    check_real_kind(kind);
    let f = eval_f_bessel(params)?;
    // (f - f̄)/2i and (f + f̄)/2 for real parameters.
    Ok(f.map(|v| real(if kind == Kind::Sin { v.im } else { v.re })))
}

pub fn eval_original_sin<T: Real>(params: &RealParams<T>) -> Result<EvalResult<T>> {
    original_component(params, Kind::Sin)
}

pub fn eval_original_cos<T: Real>(params: &RealParams<T>) -> Result<EvalResult<T>> {
    original_component(params, Kind::Cos)
}

/// The original form with the `(-1)^m` repair applied where the overall
/// sign-error condition holds.
pub fn eval_corrected_original<T: Real>(
    params: &RealParams<T>,
    kind: Kind,
) -> Result<EvalResult<T>> {
    let res = match kind {
        Kind::F => eval_f_bessel(params)?,
        _ => original_component(params, kind)?,
    };
    let flip = params.m % 2 == 1 && overall_sign_error(params.p, params.q, params.a, params.b);
    let res = EvalResult {
        method: Method::CorrectedBessel,
        ..res
    };
    Ok(if flip { res.map(|v| -v) } else { res })
}

pub fn eval_corrected_original_sin<T: Real>(params: &RealParams<T>) -> Result<EvalResult<T>> {
    eval_corrected_original(params, Kind::Sin)
}

pub fn eval_corrected_original_cos<T: Real>(params: &RealParams<T>) -> Result<EvalResult<T>> {
    eval_corrected_original(params, Kind::Cos)
}

// ---------------------------------------------------------------------------
// Improved (₀F₁) form, real parameters

/// `f = 2π X^m/m! · ₀F₁(;m+1; XY)`.
pub fn eval_f_hyp<T: Real>(params: &RealParams<T>) -> Result<EvalResult<T>> {
    params.validate()?;
    let k = params.improved_constants();
    let (v, series) = hyp_term(k.base(), k.argument(), params.m)?;
    let two_pi = T::TAU();
    Ok(EvalResult::new(
        real(two_pi) * v,
        Method::Hyp0F1Real,
        series.terms_used,
        two_pi * power_over_factorial(k.base(), params.m).norm() * series.truncation_estimate,
    ))
}

fn improved_component<T: Real>(params: &RealParams<T>, kind: Kind) -> Result<EvalResult<T>> {
    check_real_kind(kind);
    params.validate()?;
    let k = params.improved_constants();
    let m = params.m;
    let (lower, s1) = hyp_term(k.base().conj(), k.argument().conj(), m)?;
    let (upper, s2) = hyp_term(k.base(), k.argument(), m)?;
    let scale = T::PI() * power_over_factorial(k.base(), m).norm();
    EvalResult::new(
        combine(kind, lower, upper),
        Method::Hyp0F1Real,
        s1.terms_used + s2.terms_used,
        scale * (s1.truncation_estimate + s2.truncation_estimate),
    )
    .clamp_real()
}

pub fn eval_improved_sin<T: Real>(params: &RealParams<T>) -> Result<EvalResult<T>> {
    improved_component(params, Kind::Sin)
}

pub fn eval_improved_cos<T: Real>(params: &RealParams<T>) -> Result<EvalResult<T>> {
    improved_component(params, Kind::Cos)
}

pub fn eval_improved<T: Real>(params: &RealParams<T>, kind: Kind) -> Result<EvalResult<T>> {
    match kind {
        Kind::F => eval_f_hyp(params),
        _ => improved_component(params, kind),
    }
}

pub fn eval_original<T: Real>(params: &RealParams<T>, kind: Kind) -> Result<EvalResult<T>> {
    match kind {
        Kind::F => eval_f_bessel(params),
        _ => original_component(params, kind),
    }
}

// ---------------------------------------------------------------------------
// Complex parameters

fn complex_component<T: Real>(params: &ComplexParams<T>, kind: Kind) -> Result<EvalResult<T>> {
    params.validate()?;
    let k = params.complex_constants();
    let m = params.m;
    let (f2, s2) = hyp_term(k.base2(), k.argument2(), m)?;
    let pi = T::PI();
    let trunc2 = pi * power_over_factorial(k.base2(), m).norm() * s2.truncation_estimate;
    if kind == Kind::F {
        // f = cos + i·sin = 2π · (second term)
        let two = T::lit(2.0);
        return Ok(EvalResult::new(
            real(two * pi) * f2,
            Method::Hyp0F1Complex,
            s2.terms_used,
            two * trunc2,
        ));
    }
    let (f1, s1) = hyp_term(k.base1(), k.argument1(), m)?;
    let trunc1 = pi * power_over_factorial(k.base1(), m).norm() * s1.truncation_estimate;
    Ok(EvalResult::new(
        combine(kind, f1, f2),
        Method::Hyp0F1Complex,
        s1.terms_used + s2.terms_used,
        trunc1 + trunc2,
    ))
}

/// `(iπ/m!)[(A₁+iB₁)^m ₀F₁(;m+1;C₁+iD₁) − (A₂+iB₂)^m ₀F₁(;m+1;C₂+iD₂)]`.
pub fn eval_complex_sin<T: Real>(params: &ComplexParams<T>) -> Result<EvalResult<T>> {
    complex_component(params, Kind::Sin)
}

/// `(π/m!)[(A₁+iB₁)^m ₀F₁(;m+1;C₁+iD₁) + (A₂+iB₂)^m ₀F₁(;m+1;C₂+iD₂)]`.
pub fn eval_complex_cos<T: Real>(params: &ComplexParams<T>) -> Result<EvalResult<T>> {
    complex_component(params, Kind::Cos)
}

/// `cos-integral + i·sin-integral`, which collapses to the single term
/// `(2π/m!)(A₂+iB₂)^m ₀F₁(;m+1;C₂+iD₂)`.
pub fn eval_complex_f<T: Real>(params: &ComplexParams<T>) -> Result<EvalResult<T>> {
    complex_component(params, Kind::F)
}

pub fn eval_complex<T: Real>(params: &ComplexParams<T>, kind: Kind) -> Result<EvalResult<T>> {
    complex_component(params, kind)
}
