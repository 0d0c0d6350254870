//! Principal-branch complex arithmetic.
//!
//! Branch convention: `arg z ∈ (-π, π]`, with the negative real axis mapped
//! to `+π`. A negative-zero imaginary part is normalised to `+0` before any
//! angle is taken, so `-1 - 0i` also has argument `+π`.
//!
//! Half-integer powers are formed as integer powers of the principal square
//! root, which is the principal value `|z|^{m/2} e^{i(m/2) arg z}` without the
//! rounding of an explicit `exp`/`ln` round trip.

use std::cmp::Ordering;

use num_complex::Complex;

use crate::eft::sign_of_imag_product;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Replaces a `-0` imaginary part with `+0`.
#[inline]
pub fn normalize_zero<T: Real>(z: Complex<T>) -> Complex<T> {
    if z.im.is_zero() {
        Complex::new(z.re, T::zero())
    } else {
        z
    }
}

#[inline]
pub fn is_zero<T: Real>(z: Complex<T>) -> bool {
    z.re.is_zero() && z.im.is_zero()
}

pub fn check_finite<T: Real>(z: Complex<T>, what: &'static str) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite(what))
    }
}

/// Principal argument in `(-π, π]`.
pub fn principal_arg<T: Real>(z: Complex<T>) -> Result<T> {
    if is_zero(z) {
        return Err(Error::ZeroArgument);
    }
    let z = normalize_zero(z);
    Ok(z.im.atan2(z.re))
}

/// Four-quadrant inverse tangent, identical to `principal_arg(x + iy)`.
pub fn atan2_full<T: Real>(y: T, x: T) -> Result<T> {
    principal_arg(Complex::new(x, y))
}

/// Principal square root; the negative real axis maps to the positive
/// imaginary axis.
pub fn principal_sqrt<T: Real>(z: Complex<T>) -> Complex<T> {
    if is_zero(z) {
        return Complex::new(T::zero(), T::zero());
    }
    let z = normalize_zero(z);
    let two = T::lit(2.0);
    let r = z.re.hypot(z.im);
    if z.re >= T::zero() {
        let t = ((r + z.re) / two).sqrt();
        Complex::new(t, z.im / (two * t))
    } else {
        let t = ((r - z.re) / two).sqrt();
        Complex::new(z.im.abs() / (two * t), t.copysign(z.im))
    }
}

/// `z^n` for integer `n` by repeated squaring; single-valued.
///
/// `0^n` is an error for `n <= 0`. Evaluators that need the `0^0 = 1` limit
/// take it explicitly from [`pow_int_zero_zero`].
pub fn cpow_int<T: Real>(z: Complex<T>, n: i64) -> Result<Complex<T>> {
    if n <= 0 && is_zero(z) {
        return Err(Error::ZeroToNonPositivePower(n));
    }
    let mut result = Complex::new(T::one(), T::zero());
    let mut base = z;
    let mut e = n.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            result = result * base;
        }
        e >>= 1;
        if e > 0 {
            base = base * base;
        }
    }
    if n < 0 {
        result = Complex::new(T::one(), T::zero()) / result;
    }
    Ok(result)
}

/// The `lim_{z→0} z^0 = 1` convention.
#[inline]
pub fn pow_int_zero_zero<T: Real>() -> Complex<T> {
    Complex::new(T::one(), T::zero())
}

/// `z^m` for non-negative integer `m`, with `0^0 = 1`.
pub fn cpow_nonneg<T: Real>(z: Complex<T>, m: u32) -> Complex<T> {
    if m == 0 {
        pow_int_zero_zero()
    } else {
        cpow_int(z, i64::from(m)).expect("positive exponent")
    }
}

/// Principal value of `z^{m/2}`: `|z|^{m/2} e^{i (m/2) arg z}`.
///
/// `z^{0/2} = 1` for every `z`, and `0^{m/2} = 0` for `m > 0`.
pub fn cpow_half<T: Real>(z: Complex<T>, m: u32) -> Result<Complex<T>> {
    if m == 0 {
        return Ok(pow_int_zero_zero());
    }
    if is_zero(z) {
        return Ok(Complex::new(T::zero(), T::zero()));
    }
    cpow_int(principal_sqrt(z), i64::from(m))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum HalfPlane {
    /// `arg ∈ (0, π]`
    Upper,
    /// `arg ∈ (-π, 0)`
    Lower,
    /// `arg = 0`
    PositiveReal,
}

fn half_plane<T: Real>(z: Complex<T>) -> HalfPlane {
    if z.im > T::zero() {
        HalfPlane::Upper
    } else if z.im < T::zero() {
        HalfPlane::Lower
    } else if z.re < T::zero() {
        HalfPlane::Upper
    } else {
        HalfPlane::PositiveReal
    }
}

/// True when `arg z + arg w ∉ (-π, π]`, i.e. when `z^α w^α = -(zw)^α` for
/// every odd multiple `α` of 1/2.
///
/// Decided exactly from the half-planes of `z`, `w` and the sign of
/// `Im(zw)`, so inputs lying exactly on the boundary `arg z + arg w = ±π`
/// are classified correctly even where the floating-point angle sum is not.
pub fn power_combination_flips<T: Real>(z: Complex<T>, w: Complex<T>) -> Result<bool> {
    if is_zero(z) || is_zero(w) {
        return Err(Error::ZeroArgument);
    }
    let (z, w) = (normalize_zero(z), normalize_zero(w));
    let flips = match (half_plane(z), half_plane(w)) {
        // Sum in (0, 2π]: beyond π iff sin(sum) < 0, or sum = 2π.
        (HalfPlane::Upper, HalfPlane::Upper) => {
            (z.im.is_zero() && w.im.is_zero()) || sign_of_imag_product(z, w) == Ordering::Less
        }
        // Sum in (-2π, 0): at or below -π iff sin(sum) >= 0.
        (HalfPlane::Lower, HalfPlane::Lower) => sign_of_imag_product(z, w) != Ordering::Less,
        _ => false,
    };
    Ok(flips)
}

/// The angles behind a [`power_combination_flips`] decision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchDiagnostics<T> {
    pub theta_z: T,
    pub theta_w: T,
    /// `theta_z + theta_w ∈ (-π, π]`, decided exactly.
    pub sum_in_principal: bool,
}

pub fn branch_diagnostics<T: Real>(z: Complex<T>, w: Complex<T>) -> Result<BranchDiagnostics<T>> {
    Ok(BranchDiagnostics {
        theta_z: principal_arg(z)?,
        theta_w: principal_arg(w)?,
        sum_in_principal: !power_combination_flips(z, w)?,
    })
}
