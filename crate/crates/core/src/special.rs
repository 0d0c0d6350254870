//! Power series for the modified Bessel function `I_m` and the confluent
//! hypergeometric limit function `₀F₁(;b;z)` at integer order.
//!
//! Both series are entire. Terms are generated by their ratio recurrence, so
//! no factorial or Pochhammer value is ever formed on its own, and every
//! term and partial sum is carried in double-word precision. The
//! cancellation along the oscillatory directions (for `I_m`, near the
//! imaginary axis) therefore costs no accuracy in the rounded result.
//!
//! Truncation: stop once two consecutive terms are each at most
//! [`Real::series_rtol`] times the running sum; give up after
//! [`MAX_TERMS`] terms.

use num_complex::Complex;

use crate::complex::check_finite;
use crate::eft::ComplexDW;
use crate::error::{Error, Result};
use crate::scalar::Real;

pub const MAX_TERMS: usize = 500;

/// A truncated series sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult<T> {
    pub value: Complex<T>,
    pub terms_used: usize,
    /// Magnitude of the first omitted term.
    pub truncation_estimate: T,
}

/// Sums `t_0 + t_1 + ...` with `t_{k+1} = t_k * ratio / denom(k)`.
fn sum_series<T: Real>(
    first: ComplexDW<T>,
    ratio: ComplexDW<T>,
    denom: impl Fn(u32) -> T,
) -> Result<SeriesResult<T>> {
    let rtol = T::series_rtol();
    let negligible = |term: ComplexDW<T>, sum: ComplexDW<T>| term.norm_hi() <= rtol * sum.norm_hi();

    let mut sum = first;
    let mut term = first;
    let mut terms_used = 1;
    let mut quiet = usize::from(negligible(term, sum));
    let mut k = 0u32;
    loop {
        let next = (term * ratio).div_scalar(denom(k));
        if quiet >= 2 {
            return Ok(SeriesResult {
                value: sum.value(),
                terms_used,
                truncation_estimate: next.norm_hi(),
            });
        }
        if terms_used >= MAX_TERMS {
            return Err(Error::SeriesNonConvergence { terms: terms_used });
        }
        sum = sum + next;
        term = next;
        terms_used += 1;
        k += 1;
        if !sum.is_finite() {
            return Err(Error::SeriesOverflow { terms: terms_used });
        }
        quiet = if negligible(term, sum) { quiet + 1 } else { 0 };
    }
}

/// `I_m(z) = Σ_k (z/2)^{m+2k} / (k! (m+k)!)`.
pub fn bessel_i<T: Real>(m: u32, z: Complex<T>) -> Result<SeriesResult<T>> {
    check_finite(z, "bessel_i argument")?;
    let half = ComplexDW::new(z / T::lit(2.0));
    // (z/2)^m / m!
    let mut first = ComplexDW::one();
    for j in 1..=m {
        first = (first * half).div_scalar(T::of_u32(j));
    }
    let m_t = T::of_u32(m);
    sum_series(first, half * half, |k| {
        let k1 = T::of_u32(k + 1);
        k1 * (m_t + k1)
    })
}

/// `₀F₁(;b₁;z) = Σ_k z^k / (k! (b₁)_k)` for integer `b₁ >= 1`.
pub fn hyp0f1<T: Real>(b1: u32, z: Complex<T>) -> Result<SeriesResult<T>> {
    if b1 == 0 {
        return Err(Error::InvalidParameter(
            "0F1 lower parameter must be a positive integer",
        ));
    }
    check_finite(z, "hyp0f1 argument")?;
    let b = T::of_u32(b1);
    sum_series(ComplexDW::one(), ComplexDW::new(z), |k| {
        let k_t = T::of_u32(k);
        (k_t + T::one()) * (b + k_t)
    })
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn rel_err(a: Complex<f64>, b: Complex<f64>) -> f64 {
        let scale = a.norm().max(b.norm());
        if scale == 0.0 {
            0.0
        } else {
            (a - b).norm() / scale
        }
    }

    #[test]
    fn bessel_examples() {
        assert_eq!(bessel_i(0, c(0.0, 0.0)).unwrap().value, c(1.0, 0.0));
        assert_eq!(bessel_i(3, c(0.0, 0.0)).unwrap().value, c(0.0, 0.0));
        // 30-term partial sum of the defining series in 40-digit arithmetic.
        let i1 = bessel_i(1, c(2.0, 0.0)).unwrap();
        assert!((i1.value.re - 1.590_636_854_637_329).abs() < 1e-15);
        assert_eq!(i1.value.im, 0.0);
        assert!(i1.truncation_estimate <= 1e-17 * i1.value.norm());
    }

    #[test]
    fn hyp0f1_examples() {
        assert_eq!(hyp0f1(1, c(0.0, 0.0)).unwrap().value, c(1.0, 0.0));
        // Partial sum through k = 4 is 1.42491455...; the 40-digit value:
        let v = hyp0f1(2, c(0.75, 0.0)).unwrap().value;
        assert!((v.re - 1.424_917_347_073_156_2).abs() < 1e-12);
        assert!((v.re - 1.424_914_550_781_25).abs() < 3e-6);
        assert_eq!(
            hyp0f1(0, c(1.0, 0.0)),
            Err(Error::InvalidParameter(
                "0F1 lower parameter must be a positive integer"
            ))
        );
    }

    #[test]
    fn rejects_non_finite() {
        assert!(matches!(
            bessel_i(0, c(f64::NAN, 0.0)),
            Err(Error::NonFinite(_))
        ));
        assert!(matches!(
            hyp0f1(1, c(0.0, f64::INFINITY)),
            Err(Error::NonFinite(_))
        ));
    }

    #[test]
    fn huge_arguments_hit_the_term_cap() {
        let err = hyp0f1(1, c(1e6, 0.0)).unwrap_err();
        assert!(matches!(
            err,
            Error::SeriesNonConvergence { terms: MAX_TERMS } | Error::SeriesOverflow { .. }
        ));
    }

    #[test]
    fn large_order_without_factorial_overflow() {
        // 200! itself is outside the f64 range.
        let v = bessel_i(200, c(400.0, 0.0)).unwrap().value;
        assert!((v.re / 5.018_826_708_090_484e150 - 1.0).abs() < 1e-13);
        let f = hyp0f1(201, c(10.0, 0.0)).unwrap().value;
        assert!((f.re - 1.051_003_181_580_190_4).abs() < 1e-14);
    }

    #[test]
    fn cancellation_along_imaginary_axis() {
        // I_0(20i) = J_0(20) = 0.16702466434058316... (partial terms reach 4e7)
        let v = bessel_i(0, c(0.0, 20.0)).unwrap().value;
        assert!((v.re - 0.167_024_664_340_583_16).abs() < 1e-16);
    }

    #[test]
    fn terms_grow_with_argument() {
        let small = hyp0f1(1, c(1.0, 0.0)).unwrap().terms_used;
        let large = hyp0f1(1, c(400.0, 0.0)).unwrap().terms_used;
        assert!(small < large && large < MAX_TERMS, "{small} {large}");
    }

    #[test]
    fn f32_series() {
        let v = bessel_i(1, Complex::new(2.0_f32, 0.0)).unwrap().value;
        assert!((v.re - 1.590_636_9).abs() < 1e-6);
    }

    fn disk(r: f64) -> impl Strategy<Value = Complex<f64>> {
        (0.0..r, -std::f64::consts::PI..std::f64::consts::PI)
            .prop_map(|(rho, t)| Complex::from_polar(rho, t))
    }

    proptest! {
        #[test]
        fn conjugation(z in disk(20.0), m in 0u32..=10) {
            let a = bessel_i(m, z.conj()).unwrap().value;
            let b = bessel_i(m, z).unwrap().value.conj();
            prop_assert!(rel_err(a, b) <= 1e-13);
            let a = hyp0f1(m + 1, z.conj()).unwrap().value;
            let b = hyp0f1(m + 1, z).unwrap().value.conj();
            prop_assert!(rel_err(a, b) <= 1e-13);
        }

        #[test]
        fn parity(z in disk(20.0), m in 0u32..=10) {
            let a = bessel_i(m, -z).unwrap().value;
            let b = bessel_i(m, z).unwrap().value * if m % 2 == 0 { 1.0 } else { -1.0 };
            prop_assert!(rel_err(a, b) <= 1e-13);
        }

        #[test]
        fn bridge_identity(z in disk(20.0), m in 0u32..=10) {
            prop_assume!(z.norm() > 0.0);
            let lhs = bessel_i(m, z).unwrap().value;
            let mut pre = c(1.0, 0.0);
            for j in 1..=m {
                pre = pre * (z / 2.0) / f64::from(j);
            }
            let rhs = pre * hyp0f1(m + 1, z * z / 4.0).unwrap().value;
            prop_assert!(rel_err(lhs, rhs) <= 1e-12, "{} vs {}", lhs, rhs);
        }
    }
}
