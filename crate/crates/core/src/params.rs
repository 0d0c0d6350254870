//! Integral parameters and the constants derived from them.
//!
//! Every evaluator works on the family
//!
//! ```text
//! ∫₀^{2π} exp(p cos x + q sin x) · {sin, cos}(a cos x + b sin x − m x) dx
//! ```
//!
//! with non-negative integer `m`.

use num_complex::Complex;

use crate::complex::check_finite;
use crate::error::{Error, Result};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealParams<T> {
    pub p: T,
    pub q: T,
    pub a: T,
    pub b: T,
    pub m: u32,
}

impl<T: Real> RealParams<T> {
    pub fn new(p: T, q: T, a: T, b: T, m: u32) -> Self {
        Self { p, q, a, b, m }
    }

    pub fn validate(&self) -> Result<()> {
        if [self.p, self.q, self.a, self.b]
            .iter()
            .all(|v| v.is_finite())
        {
            Ok(())
        } else {
            Err(Error::NonFinite("real parameters"))
        }
    }

    /// `(b-p)² + (a+q)²`, i.e. `4|Y|²`.
    pub fn y_norm_sqr(&self) -> T {
        let u = self.b - self.p;
        let v = self.a + self.q;
        u * u + v * v
    }

    /// True exactly on the `Y = 0` line `a = -q, p = b`.
    pub fn y_is_zero(&self) -> bool {
        self.a == -self.q && self.p == self.b
    }

    pub fn to_complex(&self) -> ComplexParams<T> {
        let z = |x: T| Complex::new(x, T::zero());
        ComplexParams {
            p: z(self.p),
            q: z(self.q),
            a: z(self.a),
            b: z(self.b),
            m: self.m,
        }
    }

    pub fn original_constants(&self) -> OriginalConstants<T> {
        let Self { p, q, a, b, .. } = *self;
        let two = T::lit(2.0);
        OriginalConstants {
            a: p * p - q * q + a * a - b * b,
            b: two * (p * q + a * b),
            c: p * p + q * q - a * a - b * b,
            d: two * (a * p + b * q),
        }
    }

    pub fn improved_constants(&self) -> ImprovedConstants<T> {
        let Self { p, q, a, b, .. } = *self;
        let (two, four) = (T::lit(2.0), T::lit(4.0));
        ImprovedConstants {
            a: (p + b) / two,
            b: (a - q) / two,
            c: (p * p + q * q - a * a - b * b) / four,
            d: (a * p + b * q) / two,
        }
    }

    pub fn factors(&self) -> IntermediateFactors<T> {
        let Self { p, q, a, b, .. } = *self;
        let two = T::lit(2.0);
        IntermediateFactors {
            x: Complex::new((p + b) / two, (a - q) / two),
            y: Complex::new((p - b) / two, (a + q) / two),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexParams<T> {
    pub p: Complex<T>,
    pub q: Complex<T>,
    pub a: Complex<T>,
    pub b: Complex<T>,
    pub m: u32,
}

impl<T: Real> ComplexParams<T> {
    pub fn new(p: Complex<T>, q: Complex<T>, a: Complex<T>, b: Complex<T>, m: u32) -> Self {
        Self { p, q, a, b, m }
    }

    pub fn validate(&self) -> Result<()> {
        for z in [self.p, self.q, self.a, self.b] {
            check_finite(z, "complex parameters")?;
        }
        Ok(())
    }

    pub fn is_real(&self) -> bool {
        [self.p, self.q, self.a, self.b]
            .iter()
            .all(|z| z.im.is_zero())
    }

    /// The real parameters, when every imaginary part is zero.
    pub fn to_real(&self) -> Option<RealParams<T>> {
        self.is_real()
            .then(|| RealParams::new(self.p.re, self.q.re, self.a.re, self.b.re, self.m))
    }

    /// `|p| + |q| + |a| + |b|`.
    pub fn magnitude(&self) -> T {
        self.p.norm() + self.q.norm() + self.a.norm() + self.b.norm()
    }

    pub fn complex_constants(&self) -> ComplexConstants<T> {
        let (pr, pi) = (self.p.re, self.p.im);
        let (qr, qi) = (self.q.re, self.q.im);
        let (ar, ai) = (self.a.re, self.a.im);
        let (br, bi) = (self.b.re, self.b.im);
        let (two, four) = (T::lit(2.0), T::lit(4.0));
        let sq = |x: T| x * x;
        ComplexConstants {
            a1: (pr + ai - qi + br) / two,
            a2: (pr - ai + qi + br) / two,
            b1: (pi - ar + qr + bi) / two,
            b2: (pi + ar - qr + bi) / two,
            c1: (sq(pr + ai) + sq(qr + bi) - sq(pi - ar) - sq(qi - br)) / four,
            c2: (sq(pr - ai) + sq(qr - bi) - sq(pi + ar) - sq(qi + br)) / four,
            d1: ((pi - ar) * (pr + ai) + (qi - br) * (qr + bi)) / two,
            d2: ((pi + ar) * (pr - ai) + (qi + br) * (qr - bi)) / two,
        }
    }
}

/// `A, B, C, D` of the table formulas.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OriginalConstants<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

/// `A′ = (p+b)/2, B′ = (a−q)/2, C′ = (p²+q²−a²−b²)/4, D′ = (ap+bq)/2`, so that
/// `X = A′ + iB′` and `XY = C′ + iD′`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImprovedConstants<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

impl<T: Real> ImprovedConstants<T> {
    pub fn base(&self) -> Complex<T> {
        Complex::new(self.a, self.b)
    }

    pub fn argument(&self) -> Complex<T> {
        Complex::new(self.c, self.d)
    }
}

/// Constants of the two exponential integrals `f₁`, `f₂` into which the sine
/// and cosine integrals split once the parameters are complex.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexConstants<T> {
    pub a1: T,
    pub a2: T,
    pub b1: T,
    pub b2: T,
    pub c1: T,
    pub c2: T,
    pub d1: T,
    pub d2: T,
}

impl<T: Real> ComplexConstants<T> {
    pub fn base1(&self) -> Complex<T> {
        Complex::new(self.a1, self.b1)
    }

    pub fn base2(&self) -> Complex<T> {
        Complex::new(self.a2, self.b2)
    }

    pub fn argument1(&self) -> Complex<T> {
        Complex::new(self.c1, self.d1)
    }

    pub fn argument2(&self) -> Complex<T> {
        Complex::new(self.c2, self.d2)
    }
}

/// `X = [(p+b) + i(a−q)]/2` and `Y = [(p−b) + i(a+q)]/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntermediateFactors<T> {
    pub x: Complex<T>,
    pub y: Complex<T>,
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    #[test]
    fn constants_for_a_known_point() {
        let params = RealParams::new(1.0, 2.0, 3.0, 4.0, 1);
        let k = params.original_constants();
        assert_eq!(
            (k.a, k.b, k.c, k.d),
            (
                1.0 - 4.0 + 9.0 - 16.0,
                2.0 * (2.0 + 12.0),
                1.0 + 4.0 - 9.0 - 16.0,
                2.0 * (3.0 + 8.0)
            )
        );
        let k = params.improved_constants();
        assert_eq!((k.a, k.b, k.c, k.d), (2.5, 0.5, -5.0, 5.5));
        assert_eq!(params.y_norm_sqr(), 9.0 + 25.0);
    }

    #[test]
    fn y_zero_line() {
        assert!(RealParams::new(1.0, -1.0, 1.0, 1.0, 2).y_is_zero());
        assert!(!RealParams::new(0.0, -1.0, 1.0, 1.0, 2).y_is_zero());
    }

    proptest! {
        #[test]
        fn factor_identities(p in -5.0..5.0f64, q in -5.0..5.0f64, a in -5.0..5.0f64, b in -5.0..5.0f64) {
            let params = RealParams::new(p, q, a, b, 0);
            let IntermediateFactors { x, y } = params.factors();
            let orig = params.original_constants();
            let imp = params.improved_constants();
            let tol = 1e-13 * (1.0 + p * p + q * q + a * a + b * b);
            prop_assert!(((y * y.conj()).re - params.y_norm_sqr() / 4.0).abs() <= tol);
            prop_assert!((x * y.conj() * 4.0 - Complex::new(orig.a, -orig.b)).norm() <= tol);
            prop_assert!((x * y * 4.0 - Complex::new(orig.c, orig.d)).norm() <= tol);
            prop_assert_eq!(imp.base(), x);
            prop_assert!((x * y - imp.argument()).norm() <= tol);
        }

        #[test]
        fn complex_constants_reduce_for_real_parameters(p in -5.0..5.0f64, q in -5.0..5.0f64, a in -5.0..5.0f64, b in -5.0..5.0f64) {
            let params = RealParams::new(p, q, a, b, 0);
            let imp = params.improved_constants();
            let k = params.to_complex().complex_constants();
            prop_assert_eq!((k.a1, k.a2), (imp.a, imp.a));
            prop_assert_eq!((k.b1, k.b2), (-imp.b, imp.b));
            prop_assert_eq!((k.c1, k.c2), (imp.c, imp.c));
            prop_assert_eq!((k.d1, k.d2), (-imp.d, imp.d));
        }
    }
}
