//! Ground truth by direct numerical integration.
//!
//! The integrands are analytic and 2π-periodic, so the equal-weight
//! trapezoidal rule converges spectrally. Nodes are doubled (reusing the
//! previous ones) until two successive estimates agree to
//! [`Real::quadrature_rtol`] relative to the integrand's L¹ mass, which keeps
//! the test meaningful for integrals that cancel to (near) zero.
//!
//! Nothing here touches the closed-form modules.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::params::ComplexParams;
use crate::scalar::Real;

/// Largest `|p| + |q| + |a| + |b|` the oracle accepts.
pub const ENVELOPE: f64 = 50.0;
pub const MIN_NODES: usize = 16;
pub const MAX_NODES: usize = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult<T> {
    pub value: Complex<T>,
    /// `|T_N - T_{N/2}|` at the final refinement.
    pub error_estimate: T,
    /// Integrand evaluations, all refinements included.
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Range {
    /// `[0, 2π)` with the periodic trapezoidal rule.
    Full,
    /// `[0, π]` with half-weight endpoints. Spectrally accurate for integrands
    /// symmetric about `x = π`.
    Half,
}

impl Range {
    fn length<T: Real>(self) -> T {
        match self {
            Range::Full => T::TAU(),
            Range::Half => T::PI(),
        }
    }
}

/// Neumaier-compensated sum of complex values.
#[derive(Debug, Clone, Copy)]
struct CompensatedSum<T> {
    sum: Complex<T>,
    comp: Complex<T>,
}

impl<T: Real> CompensatedSum<T> {
    fn new() -> Self {
        let zero = Complex::new(T::zero(), T::zero());
        Self {
            sum: zero,
            comp: zero,
        }
    }

    fn add(&mut self, z: Complex<T>) {
        fn step<T: Real>(sum: &mut T, comp: &mut T, x: T) {
            let t = *sum + x;
            *comp = *comp
                + if sum.abs() >= x.abs() {
                    (*sum - t) + x
                } else {
                    (x - t) + *sum
                };
            *sum = t;
        }
        step(&mut self.sum.re, &mut self.comp.re, z.re);
        step(&mut self.sum.im, &mut self.comp.im, z.im);
    }

    fn value(&self) -> Complex<T> {
        self.sum + self.comp
    }
}

/// Trapezoidal integration of `g` over `range`, starting from `n0` panels
/// and doubling up to `max_nodes`.
pub fn integrate_with<T: Real>(
    g: impl Fn(T) -> Complex<T>,
    range: Range,
    n0: usize,
    max_nodes: usize,
    rtol: T,
) -> Result<QuadratureResult<T>> {
    let length: T = range.length();
    let mut n = n0.max(2).next_power_of_two();
    let mut evaluations = 0;

    // Sums of g and |g| over the current node set, endpoints half-weighted.
    let mut sum = CompensatedSum::new();
    let mut mass = T::zero();
    let mut visit = |x: T, weight: T, sum: &mut CompensatedSum<T>, mass: &mut T| {
        let y = g(x);
        evaluations += 1;
        sum.add(y * weight);
        *mass = *mass + y.norm() * weight;
    };

    let h0 = length / T::of_u32(n as u32);
    match range {
        Range::Full => {
            for j in 0..n {
                visit(T::of_u32(j as u32) * h0, T::one(), &mut sum, &mut mass);
            }
        }
        Range::Half => {
            let half = T::lit(0.5);
            visit(T::zero(), half, &mut sum, &mut mass);
            for j in 1..n {
                visit(T::of_u32(j as u32) * h0, T::one(), &mut sum, &mut mass);
            }
            visit(length, half, &mut sum, &mut mass);
        }
    }
    let mut estimate = sum.value() * h0;

    loop {
        if 2 * n > max_nodes {
            return Err(Error::QuadratureNonConvergence {
                nodes: n,
                error_estimate: f64::NAN,
            });
        }
        n *= 2;
        let h = length / T::of_u32(n as u32);
        // New nodes are the odd multiples of h.
        for j in (1..n).step_by(2) {
            visit(T::of_u32(j as u32) * h, T::one(), &mut sum, &mut mass);
        }
        let refined = sum.value() * h;
        let change = (refined - estimate).norm();
        let scale = refined.norm().max(mass * h);
        if change <= rtol * scale {
            return Ok(QuadratureResult {
                value: refined,
                error_estimate: change,
                evaluations,
            });
        }
        if 2 * n > max_nodes {
            return Err(Error::QuadratureNonConvergence {
                nodes: n,
                error_estimate: change.to_f64_lossy(),
            });
        }
        estimate = refined;
    }
}

/// [`integrate_with`] with the default policy and a starting node count
/// adequate for an integrand of the given bandwidth.
pub fn integrate<T: Real>(
    g: impl Fn(T) -> Complex<T>,
    range: Range,
    bandwidth: T,
) -> Result<QuadratureResult<T>> {
    let want = (T::lit(2.0) * bandwidth)
        .ceil()
        .to_usize()
        .unwrap_or(MAX_NODES);
    integrate_with(
        g,
        range,
        want.max(MIN_NODES),
        MAX_NODES,
        T::quadrature_rtol(),
    )
}

fn check_envelope<T: Real>(params: &ComplexParams<T>) -> Result<()> {
    params.validate()?;
    let magnitude = params.magnitude().to_f64_lossy();
    if magnitude > ENVELOPE {
        return Err(Error::OutsideEnvelope {
            magnitude,
            limit: ENVELOPE,
        });
    }
    Ok(())
}

fn bandwidth<T: Real>(params: &ComplexParams<T>) -> T {
    params.magnitude() + T::of_u32(params.m)
}

/// `(u(x), v(x)) = (p cos x + q sin x, a cos x + b sin x - m x)`.
fn phases<T: Real>(params: &ComplexParams<T>, x: T) -> (Complex<T>, Complex<T>) {
    let (s, c) = x.sin_cos();
    let u = params.p * c + params.q * s;
    let v = params.a * c + params.b * s - Complex::new(T::of_u32(params.m) * x, T::zero());
    (u, v)
}

/// `∫₀^{2π} exp(p cos x + q sin x) exp[i(a cos x + b sin x - m x)] dx`.
pub fn oracle_f<T: Real>(params: &ComplexParams<T>) -> Result<QuadratureResult<T>> {
    check_envelope(params)?;
    let i = Complex::new(T::zero(), T::one());
    integrate(
        |x| {
            let (u, v) = phases(params, x);
            (u + i * v).exp()
        },
        Range::Full,
        bandwidth(params),
    )
}

/// `∫₀^{2π} exp(p cos x + q sin x) sin(a cos x + b sin x - m x) dx`.
pub fn oracle_sin<T: Real>(params: &ComplexParams<T>) -> Result<QuadratureResult<T>> {
    check_envelope(params)?;
    integrate(
        |x| {
            let (u, v) = phases(params, x);
            u.exp() * v.sin()
        },
        Range::Full,
        bandwidth(params),
    )
}

/// `∫₀^{2π} exp(p cos x + q sin x) cos(a cos x + b sin x - m x) dx`.
pub fn oracle_cos<T: Real>(params: &ComplexParams<T>) -> Result<QuadratureResult<T>> {
    check_envelope(params)?;
    integrate(
        |x| {
            let (u, v) = phases(params, x);
            u.exp() * v.cos()
        },
        Range::Full,
        bandwidth(params),
    )
}

#[cfg(test)]
mod tests {
    use std::f64::consts::{PI, TAU};

    use proptest::prelude::*;

    use super::*;
    use crate::params::RealParams;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn real(p: f64, q: f64, a: f64, b: f64, m: u32) -> ComplexParams<f64> {
        RealParams::new(p, q, a, b, m).to_complex()
    }

    #[test]
    fn trivial_integrands() {
        let r = oracle_f(&real(0.0, 0.0, 0.0, 0.0, 0)).unwrap();
        assert!((r.value - c(TAU, 0.0)).norm() < 1e-14);
        assert!(r.evaluations >= 2 * MIN_NODES);
        let r = oracle_f(&real(0.0, 0.0, 0.0, 0.0, 3)).unwrap();
        assert!(r.value.norm() < 1e-14);
    }

    #[test]
    fn sign_error_point() {
        let r = oracle_f(&real(-2.0, 0.0, 0.0, 1.0, 1)).unwrap();
        assert!(
            (r.value.re + 4.476_509_869_537_685).abs() < 1e-13,
            "{}",
            r.value
        );
        assert!(r.value.im.abs() < 1e-13);
        assert!(r.error_estimate < 1e-11);
    }

    #[test]
    fn half_range_catalog_integrand() {
        // ∫₀^π e^{cos x} cos(sin x) dx = π
        let r = integrate(
            |x: f64| c(x.cos().exp() * x.sin().cos(), 0.0),
            Range::Half,
            1.0,
        )
        .unwrap();
        assert!((r.value.re - PI).abs() < 1e-13);
        // and 2π over the full period
        let cp = real(1.0, 0.0, 0.0, 1.0, 0);
        assert!((oracle_cos(&cp).unwrap().value.re - TAU).abs() < 1e-13);
    }

    #[test]
    fn envelope_is_enforced() {
        let err = oracle_f(&real(20.0, 20.0, 5.0, 6.0, 0)).unwrap_err();
        assert_eq!(
            err,
            Error::OutsideEnvelope {
                magnitude: 51.0,
                limit: ENVELOPE
            }
        );
        assert!(matches!(
            oracle_sin(&real(f64::NAN, 0.0, 0.0, 0.0, 0)),
            Err(Error::NonFinite(_))
        ));
    }

    #[test]
    fn node_cap_reports_non_convergence() {
        let err = integrate_with(
            |x: f64| c((30.0 * x.cos()).exp(), 0.0),
            Range::Full,
            4,
            16,
            1e-12,
        )
        .unwrap_err();
        assert!(matches!(
            err,
            Error::QuadratureNonConvergence { nodes: 16, .. }
        ));
    }

    #[test]
    fn refinement_past_convergence_is_stable() {
        let cp = real(3.0, -2.0, 1.5, 4.0, 5);
        let r = oracle_f(&cp).unwrap();
        let g = |x: f64| {
            let (u, v) = phases(&cp, x);
            (u + c(0.0, 1.0) * v).exp()
        };
        let n = r.evaluations.next_power_of_two();
        let finer = integrate_with(g, Range::Full, 2 * n, 4 * n, 1.0).unwrap();
        assert!((finer.value - r.value).norm() < 1e-12 * r.value.norm().max(1.0));
    }

    #[test]
    fn complex_sine_splits_into_two_exponential_integrals() {
        let cp = ComplexParams::new(c(1.0, 0.5), c(-0.3, 1.0), c(0.2, -0.7), c(1.1, 0.4), 2);
        let i = c(0.0, 1.0);
        let exp_with = |sign: f64| {
            integrate(
                |x| {
                    let (u, v) = phases(&cp, x);
                    (u + i * v * sign).exp()
                },
                Range::Full,
                10.0,
            )
            .unwrap()
            .value
        };
        let (f1, f2) = (exp_with(-1.0), exp_with(1.0));
        let s = oracle_sin(&cp).unwrap().value;
        let co = oracle_cos(&cp).unwrap().value;
        assert!((s - i / 2.0 * (f1 - f2)).norm() < 1e-12);
        assert!((co - (f1 + f2) / 2.0).norm() < 1e-12);
    }

    #[test]
    fn generic_over_f32() {
        let cp = RealParams::new(-2.0_f32, 0.0, 0.0, 1.0, 1).to_complex();
        let r = oracle_f(&cp).unwrap();
        assert!((r.value.re + 4.476_51).abs() < 1e-4);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn components_of_real_integrals(p in -5.0..5.0f64, q in -5.0..5.0f64, a in -5.0..5.0f64, b in -5.0..5.0f64, m in 0u32..=8) {
            let cp = real(p, q, a, b, m);
            let f = oracle_f(&cp).unwrap().value;
            let s = oracle_sin(&cp).unwrap().value;
            let co = oracle_cos(&cp).unwrap().value;
            let tol = 1e-11 * f.norm().max(1.0);
            prop_assert!((s.re - f.im).abs() <= tol && s.im == 0.0);
            prop_assert!((co.re - f.re).abs() <= tol && co.im == 0.0);
        }

        #[test]
        fn half_range_symmetry(p in -5.0..5.0f64, b in -5.0..5.0f64, m in 0u32..=8) {
            // q = a = 0: the integrand is symmetric about π.
            let cp = real(p, 0.0, 0.0, b, m);
            let g = |x: f64| (p * x.cos()).exp() * (b * x.sin() - f64::from(m) * x).cos();
            let half = integrate(|x| c(g(x), 0.0), Range::Half, 10.0 + f64::from(m)).unwrap().value.re;
            let full = oracle_cos(&cp).unwrap().value.re;
            prop_assert!((half - full / 2.0).abs() <= 1e-11 * full.abs().max(1.0));
        }
    }
}
