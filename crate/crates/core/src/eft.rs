//! Error-free transformations: exact signs of small polynomial expressions in
//! floating-point inputs, and double-word ("double-double") complex numbers
//! for the series kernels.
//!
//! All routines assume no overflow or underflow in intermediate products.

use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg};

use num_complex::Complex;

use crate::scalar::Real;

#[inline]
pub(crate) fn two_sum<T: Real>(a: T, b: T) -> (T, T) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum<T: Real>(a: T, b: T) -> (T, T) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
pub(crate) fn two_prod<T: Real>(a: T, b: T) -> (T, T) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

/// Exact sign of `a*b + c*d`.
pub fn sign_of_dot2<T: Real>(a: T, b: T, c: T, d: T) -> Ordering {
    let (p1, e1) = two_prod(a, b);
    let (p2, e2) = two_prod(c, d);
    // [e1, p1] is a nonoverlapping expansion in increasing magnitude; grow it
    // by e2 and then p2.
    let mut expansion = [e1, p1, T::zero(), T::zero()];
    for (len, addend) in [(2, e2), (3, p2)] {
        let mut q = addend;
        for slot in expansion.iter_mut().take(len) {
            let (s, h) = two_sum(q, *slot);
            *slot = h;
            q = s;
        }
        expansion[len] = q;
    }
    expansion
        .iter()
        .rev()
        .find(|x| !x.is_zero())
        .map_or(Ordering::Equal, |x| {
            if x.is_sign_positive() {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        })
}

/// Exact sign of the imaginary part of `z * w`.
#[inline]
pub fn sign_of_imag_product<T: Real>(z: Complex<T>, w: Complex<T>) -> Ordering {
    sign_of_dot2(z.re, w.im, z.im, w.re)
}

/// An unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DoubleWord<T> {
    pub hi: T,
    pub lo: T,
}

impl<T: Real> DoubleWord<T> {
    pub fn new(x: T) -> Self {
        Self {
            hi: x,
            lo: T::zero(),
        }
    }

    pub fn value(self) -> T {
        self.hi + self.lo
    }

    /// Division by a plain scalar (used with exact integer divisors).
    pub fn div_scalar(self, d: T) -> Self {
        let q1 = self.hi / d;
        let (p, e) = two_prod(q1, d);
        let (s, f) = two_sum(self.hi, -p);
        let f = f - e + self.lo;
        let q2 = (s + f) / d;
        let (hi, lo) = quick_two_sum(q1, q2);
        Self { hi, lo }
    }
}

impl<T: Real> Neg for DoubleWord<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl<T: Real> Add for DoubleWord<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let (s, e) = two_sum(self.hi, rhs.hi);
        let (t, f) = two_sum(self.lo, rhs.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Self { hi, lo }
    }
}

impl<T: Real> Mul for DoubleWord<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let (p, e) = two_prod(self.hi, rhs.hi);
        let e = e + (self.hi * rhs.lo + self.lo * rhs.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Self { hi, lo }
    }
}

/// Complex number with double-word components.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ComplexDW<T> {
    pub re: DoubleWord<T>,
    pub im: DoubleWord<T>,
}

impl<T: Real> ComplexDW<T> {
    pub fn new(z: Complex<T>) -> Self {
        Self {
            re: DoubleWord::new(z.re),
            im: DoubleWord::new(z.im),
        }
    }

    pub fn one() -> Self {
        Self::new(Complex::new(T::one(), T::zero()))
    }

    pub fn value(self) -> Complex<T> {
        Complex::new(self.re.value(), self.im.value())
    }

    /// Cheap magnitude estimate from the leading words.
    pub fn norm_hi(self) -> T {
        self.re.hi.hypot(self.im.hi)
    }

    pub fn div_scalar(self, d: T) -> Self {
        Self {
            re: self.re.div_scalar(d),
            im: self.im.div_scalar(d),
        }
    }

    pub fn is_finite(self) -> bool {
        self.re.hi.is_finite() && self.im.hi.is_finite()
    }
}

impl<T: Real> Add for ComplexDW<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl<T: Real> Mul for ComplexDW<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        Self {
            re: self.re * rhs.re + -(self.im * rhs.im),
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot2_sign_sees_below_rounding() {
        // 1e16 * 1 + (-1e16 - 2) * 1 rounds to -2 or 0 depending on order;
        // the exact answer is negative.
        let big = 1e16_f64;
        assert_eq!(sign_of_dot2(big, 1.0, -(big + 2.0), 1.0), Ordering::Less);
        // (1 + 2^-30)^2 - (1 + 2^-29) = 2^-60 > 0, invisible in plain f64.
        let x = 1.0 + 2f64.powi(-30);
        let y = 1.0 + 2f64.powi(-29);
        assert_eq!(x * x - y, 0.0);
        assert_eq!(sign_of_dot2(x, x, -y, 1.0), Ordering::Greater);
        assert_eq!(sign_of_dot2(3.0, 2.0, -6.0, 1.0), Ordering::Equal);
    }

    #[test]
    fn double_word_keeps_tail_bits() {
        let third = DoubleWord::new(1.0_f64).div_scalar(3.0);
        let back = third * DoubleWord::new(3.0);
        assert_eq!(back.hi, 1.0);
        assert!(back.lo.abs() < 1e-31);

        let tiny = DoubleWord::new(1e-20_f64);
        let sum = DoubleWord::new(1.0) + tiny;
        assert_eq!(sum.hi, 1.0);
        assert_eq!(sum.lo, 1e-20);
    }

    #[test]
    fn complex_product_matches_plain_arithmetic() {
        let a = ComplexDW::new(Complex::new(1.5_f64, -2.0));
        let b = ComplexDW::new(Complex::new(0.25, 4.0));
        assert_eq!(
            (a * b).value(),
            Complex::new(1.5, -2.0) * Complex::new(0.25, 4.0)
        );
    }
}
