//! When the table formulas go wrong.
//!
//! The Bessel-form closed form combines principal half-integer powers in
//! three places:
//!
//! 1. `X^{m/2} Ȳ^{m/2} → (XȲ)^{m/2}`
//! 2. `X^{1/2} Y^{1/2} → (XY)^{1/2}` inside `I_m`
//! 3. `Y^{-m/2} Ȳ^{-m/2} → (YȲ)^{-m/2}`
//!
//! Each combination negates the result for odd `m` exactly when the two
//! principal arguments sum outside `(-π, π]`. The predicates here decide
//! this directly from `p, q, a, b`. Never exactly two of them hold at once,
//! and the overall result carries a sign error iff an odd number hold,
//! which [`overall_sign_error`] expresses through the constant `K`.
//!
//! Comparisons of the form `p < -b·u/v` are decided on the exact value of
//! `p·v + b·u` (see [`crate::eft::sign_of_dot2`]), so the equality branches
//! are exact for every representable input, not only for inputs where the
//! quotient happens to round exactly.

use std::cmp::Ordering;

use crate::eft::sign_of_dot2;
use crate::error::{Error, Result};
use crate::params::RealParams;
use crate::scalar::Real;

/// Orders `p` against `-b·num/den` (`den != 0`) exactly.
fn cmp_with_neg_ratio<T: Real>(p: T, b: T, num: T, den: T) -> Ordering {
    let s = sign_of_dot2(p, den, b, num);
    if den < T::zero() {
        s.reverse()
    } else {
        s
    }
}

/// `X^{m/2} Ȳ^{m/2} ≠ (XȲ)^{m/2}` for odd `m`.
pub fn case1_predicate<T: Real>(p: T, q: T, a: T, b: T) -> bool {
    if q.is_zero() {
        return a.is_zero() && p < -b.abs();
    }
    let vs_ratio = cmp_with_neg_ratio(p, b, a, q);
    let dominant = q.abs() > a.abs() || q == -a.abs();
    (dominant && vs_ratio == Ordering::Less) || (q > a.abs() && vs_ratio == Ordering::Equal)
}

/// `X^{1/2} Y^{1/2} ≠ (XY)^{1/2}`, which flips `I_m` for odd `m`.
pub fn case2_predicate<T: Real>(p: T, q: T, a: T, b: T) -> bool {
    if a.is_zero() {
        return q.is_zero() && p < -b.abs();
    }
    let vs_ratio = cmp_with_neg_ratio(p, b, q, a);
    let dominant = a.abs() > q.abs() || a == q.abs();
    (dominant && vs_ratio == Ordering::Less) || (a < -q.abs() && vs_ratio == Ordering::Equal)
}

/// `Y^{-m/2} Ȳ^{-m/2} ≠ (YȲ)^{-m/2}`: `Y` is a negative real number.
///
/// Fails with [`Error::YIsZero`] on the line `a = -q, p = b`, where none of
/// the three quantities exists.
pub fn case3_predicate<T: Real>(p: T, q: T, a: T, b: T) -> Result<bool> {
    if a != -q {
        return Ok(false);
    }
    match p.partial_cmp(&b) {
        Some(Ordering::Equal) => Err(Error::YIsZero),
        Some(Ordering::Less) => Ok(true),
        _ => Ok(false),
    }
}

/// `K` as the pair `(num, den)` with `K = num/den`.
fn k_ratio<T: Real>(a: T, q: T) -> (T, T) {
    if a.is_zero() && q.is_zero() {
        (-T::one(), T::one())
    } else if a.abs() >= q.abs() {
        (q, a)
    } else {
        (a, q)
    }
}

/// `q/a` when `|a| >= |q|`, `a/q` when `|q| >= |a|`, `-1` when `a = q = 0`.
/// At `|a| = |q| != 0` both branches give the same `±1`.
pub fn k_constant<T: Real>(a: T, q: T) -> T {
    let (num, den) = k_ratio(a, q);
    num / den
}

/// The Bessel-form closed form carries an overall sign error (for odd `m`)
/// iff `p < -bK`, or `p = -bK` with `a < -|q|` or `q > |a|`.
pub fn overall_sign_error<T: Real>(p: T, q: T, a: T, b: T) -> bool {
    let (num, den) = k_ratio(a, q);
    match cmp_with_neg_ratio(p, b, num, den) {
        Ordering::Less => true,
        Ordering::Equal => a < -q.abs() || q > a.abs(),
        Ordering::Greater => false,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignErrorReport<T> {
    pub case1: bool,
    pub case2: bool,
    /// Reported `false` when `y_is_zero`.
    pub case3: bool,
    pub k_constant: T,
    pub overall: bool,
    /// `overall` and `m` odd: the original formulas return the negated value.
    pub flip_applies: bool,
    pub y_is_zero: bool,
    /// `p` lies within `1e-12·max(1, |p|)` of the threshold `-bK`, where a
    /// floating-point caller's verdict is fragile.
    pub boundary: bool,
}

impl<T: Real> SignErrorReport<T> {
    pub fn cases_firing(&self) -> usize {
        [self.case1, self.case2, self.case3]
            .iter()
            .filter(|&&c| c)
            .count()
    }
}

pub fn build_report<T: Real>(params: &RealParams<T>) -> SignErrorReport<T> {
    let RealParams { p, q, a, b, m } = *params;
    let y_is_zero = params.y_is_zero();
    let k = k_constant(a, q);
    let overall = overall_sign_error(p, q, a, b);
    SignErrorReport {
        case1: case1_predicate(p, q, a, b),
        case2: case2_predicate(p, q, a, b),
        case3: case3_predicate(p, q, a, b).unwrap_or(false),
        k_constant: k,
        overall,
        flip_applies: overall && m % 2 == 1,
        y_is_zero,
        boundary: (p + b * k).abs() < T::lit(1e-12) * T::one().max(p.abs()),
    }
}
