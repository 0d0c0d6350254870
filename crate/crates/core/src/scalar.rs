//! The real scalar type every routine in the crate is generic over.

use std::fmt::{Debug, Display, LowerExp};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// A binary floating-point type usable as the real component of the
/// crate's complex values.
///
/// The associated tolerances are the precision-dependent knobs of the
/// numerical policies (series truncation, quadrature refinement, the clamp
/// applied to the imaginary residue of real-parameter results).
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + Debug
    + Display
    + LowerExp
    + Default
    + Send
    + Sync
    + 'static
{
    /// A series stops once two consecutive terms fall below this fraction of
    /// the running partial sum.
    fn series_rtol() -> Self;

    /// Relative agreement required between successive trapezoid refinements.
    fn quadrature_rtol() -> Self;

    /// Largest imaginary residue tolerated (and clamped) on a result that is
    /// real in exact arithmetic.
    fn residue_tol() -> Self;

    /// Lossless for integer values below 2^24 on both supported types.
    #[inline]
    fn of_u32(n: u32) -> Self {
        <Self as FromPrimitive>::from_u32(n).expect("u32 is representable")
    }

    #[inline]
    fn lit(x: f64) -> Self {
        <Self as FromPrimitive>::from_f64(x).expect("literal is representable")
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    fn series_rtol() -> f64 {
        1e-17
    }

    fn quadrature_rtol() -> f64 {
        1e-12
    }

    fn residue_tol() -> f64 {
        1e-10
    }
}

impl Real for f32 {
    fn series_rtol() -> f32 {
        1e-8
    }

    fn quadrature_rtol() -> f32 {
        1e-5
    }

    fn residue_tol() -> f32 {
        1e-3
    }
}

/// `n!` accumulated in `T`. Overflows to infinity past `n = 170` for `f64`.
pub fn factorial<T: Real>(n: u32) -> T {
    (2..=n).fold(T::one(), |acc, k| acc * T::of_u32(k))
}
