//! Special cases of the integral family from the 3.93x tables.
//!
//! Every entry carries three independent descriptions of the same number:
//! its closed form, a *binding* that expresses it as a linear combination of
//! the general sine/cosine integrals, and its own integrand for the
//! quadrature oracle. IDs follow the book numbering; the two 3.937 entries
//! come in `-original` (the book's `atan(q/p)` form), `-corrected`
//! (`atan2`) and `-complex` variants.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;

use crate::complex::{atan2_full, cpow_nonneg, is_zero, principal_arg};
use crate::error::{Error, Result};
use crate::formulas::{eval_complex, eval_improved, power_over_factorial, Kind};
use crate::params::ComplexParams;
use crate::quadrature::{integrate, QuadratureResult, Range, ENVELOPE};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EntryId {
    Gr3931_4,
    Gr3932_1,
    Gr3932_2,
    Gr3936_1,
    Gr3936_2,
    Gr3936_3,
    Gr3936_4,
    Gr3937_3Original,
    Gr3937_4Original,
    Gr3937_3Corrected,
    Gr3937_4Corrected,
    Gr3937_3Complex,
    Gr3937_4Complex,
}

/// Static description of an entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogEntry {
    pub id: EntryId,
    pub integral: &'static str,
    pub closed_form: &'static str,
    /// The restriction as printed in the table, if any.
    pub original_restriction: &'static str,
    /// Whether the table statement needed a correction or generalisation.
    pub corrected: bool,
}

impl EntryId {
    pub const ALL: [EntryId; 13] = [
        EntryId::Gr3931_4,
        EntryId::Gr3932_1,
        EntryId::Gr3932_2,
        EntryId::Gr3936_1,
        EntryId::Gr3936_2,
        EntryId::Gr3936_3,
        EntryId::Gr3936_4,
        EntryId::Gr3937_3Original,
        EntryId::Gr3937_4Original,
        EntryId::Gr3937_3Corrected,
        EntryId::Gr3937_4Corrected,
        EntryId::Gr3937_3Complex,
        EntryId::Gr3937_4Complex,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            EntryId::Gr3931_4 => "GR-3.931-4",
            EntryId::Gr3932_1 => "GR-3.932-1",
            EntryId::Gr3932_2 => "GR-3.932-2",
            EntryId::Gr3936_1 => "GR-3.936-1",
            EntryId::Gr3936_2 => "GR-3.936-2",
            EntryId::Gr3936_3 => "GR-3.936-3",
            EntryId::Gr3936_4 => "GR-3.936-4",
            EntryId::Gr3937_3Original => "GR-3.937-3-original",
            EntryId::Gr3937_4Original => "GR-3.937-4-original",
            EntryId::Gr3937_3Corrected => "GR-3.937-3-corrected",
            EntryId::Gr3937_4Corrected => "GR-3.937-4-corrected",
            EntryId::Gr3937_3Complex => "GR-3.937-3-complex",
            EntryId::Gr3937_4Complex => "GR-3.937-4-complex",
        }
    }

    pub fn info(self) -> CatalogEntry {
        let (integral, closed_form, original_restriction, corrected) = match self {
            EntryId::Gr3931_4 => (
                "int_0^pi exp(±p' cos x) cos(p' sin x) dx",
                "pi",
                "p' real, minus sign only",
                true,
            ),
            EntryId::Gr3932_1 => (
                "int_0^pi exp(p' cos x) sin(p' sin x) sin(mx) dx",
                "pi p'^m / (2 m!) for m > 0; 0 for m = 0",
                "none stated (formula fails at m = 0)",
                true,
            ),
            EntryId::Gr3932_2 => (
                "int_0^pi exp(p' cos x) cos(p' sin x) cos(mx) dx",
                "pi p'^m / (2 m!) for m > 0; pi for m = 0",
                "none stated (formula fails at m = 0)",
                true,
            ),
            EntryId::Gr3936_1 => (
                "int_0^2pi exp(p' cos x) cos(p' sin x - mx) dx",
                "2 pi p'^m / m!",
                "none",
                false,
            ),
            EntryId::Gr3936_2 => (
                "int_0^2pi exp(p' sin x) sin(p' cos x + mx) dx",
                "2 pi p'^m / m! sin(m pi / 2)",
                "p' > 0",
                true,
            ),
            EntryId::Gr3936_3 => (
                "int_0^2pi exp(p' sin x) cos(p' cos x + mx) dx",
                "2 pi p'^m / m! cos(m pi / 2)",
                "p' > 0",
                true,
            ),
            EntryId::Gr3936_4 => (
                "int_0^2pi exp(p cos x) sin(p sin x ± mx) dx",
                "0",
                "p = 1 only",
                true,
            ),
            EntryId::Gr3937_3Original => (
                "int_0^2pi exp(p cos x + q sin x) sin(q cos x - p sin x + mx) dx",
                "2 pi / m! (p^2 + q^2)^(m/2) sin(m atan(q/p))",
                "none stated (sign error for odd m and p < 0; undefined at p = 0)",
                false,
            ),
            EntryId::Gr3937_4Original => (
                "int_0^2pi exp(p cos x + q sin x) cos(q cos x - p sin x + mx) dx",
                "2 pi / m! (p^2 + q^2)^(m/2) cos(m atan(q/p))",
                "none stated (sign error for odd m and p < 0; undefined at p = 0)",
                false,
            ),
            EntryId::Gr3937_3Corrected => (
                "int_0^2pi exp(p cos x + q sin x) sin(q cos x - p sin x + mx) dx",
                "2 pi / m! (p^2 + q^2)^(m/2) sin(m atan2(q, p))",
                "p, q real",
                true,
            ),
            EntryId::Gr3937_4Corrected => (
                "int_0^2pi exp(p cos x + q sin x) cos(q cos x - p sin x + mx) dx",
                "2 pi / m! (p^2 + q^2)^(m/2) cos(m atan2(q, p))",
                "p, q real",
                true,
            ),
            EntryId::Gr3937_3Complex => (
                "int_0^2pi exp(p cos x + q sin x) sin(q cos x - p sin x + mx) dx",
                "i pi / m! [(p - iq)^m - (p + iq)^m]",
                "p, q complex",
                true,
            ),
            EntryId::Gr3937_4Complex => (
                "int_0^2pi exp(p cos x + q sin x) cos(q cos x - p sin x + mx) dx",
                "pi / m! [(p - iq)^m + (p + iq)^m]",
                "p, q complex",
                true,
            ),
        };
        CatalogEntry {
            id: self,
            integral,
            closed_form,
            original_restriction,
            corrected,
        }
    }

    /// The range the entry's integral is stated over.
    pub fn native_range(self) -> Range {
        match self {
            EntryId::Gr3931_4 | EntryId::Gr3932_1 | EntryId::Gr3932_2 => Range::Half,
            _ => Range::Full,
        }
    }

    /// Whether the integrand is mirror-symmetric about `x = π`, so that the
    /// half- and full-range integrals differ by exactly a factor of two.
    pub fn symmetric(self) -> bool {
        matches!(
            self,
            EntryId::Gr3931_4 | EntryId::Gr3932_1 | EntryId::Gr3932_2 | EntryId::Gr3936_1
        )
    }

    /// Real-parameter entries reject complex `p`, `q`.
    pub fn real_only(self) -> bool {
        matches!(
            self,
            EntryId::Gr3937_3Original
                | EntryId::Gr3937_4Original
                | EntryId::Gr3937_3Corrected
                | EntryId::Gr3937_4Corrected
        )
    }

    /// Whether the entry uses `q` (otherwise only `p` is read).
    pub fn uses_q(self) -> bool {
        matches!(
            self,
            EntryId::Gr3937_3Original
                | EntryId::Gr3937_4Original
                | EntryId::Gr3937_3Corrected
                | EntryId::Gr3937_4Corrected
                | EntryId::Gr3937_3Complex
                | EntryId::Gr3937_4Complex
        )
    }

    /// Whether the entry has a `±` variant.
    pub fn uses_sign(self) -> bool {
        matches!(self, EntryId::Gr3931_4 | EntryId::Gr3936_4)
    }

    fn is_sine(self) -> bool {
        matches!(
            self,
            EntryId::Gr3932_1
                | EntryId::Gr3936_2
                | EntryId::Gr3936_4
                | EntryId::Gr3937_3Original
                | EntryId::Gr3937_3Corrected
                | EntryId::Gr3937_3Complex
        )
    }
}

impl fmt::Display for EntryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EntryId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        EntryId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown catalog entry {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn value<T: Real>(self) -> T {
        match self {
            Sign::Plus => T::one(),
            Sign::Minus => -T::one(),
        }
    }
}

/// Arguments of a catalog entry. `p` doubles as `p′`; `q` and `sign` are
/// ignored by entries that do not use them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CatalogArgs<T> {
    pub p: Complex<T>,
    pub q: Complex<T>,
    pub m: u32,
    pub sign: Sign,
}

impl<T: Real> CatalogArgs<T> {
    pub fn new(p: Complex<T>, q: Complex<T>, m: u32, sign: Sign) -> Self {
        Self { p, q, m, sign }
    }

    pub fn real(p: T, q: T, m: u32) -> Self {
        let z = T::zero();
        Self::new(Complex::new(p, z), Complex::new(q, z), m, Sign::Minus)
    }

    fn real_parts(&self) -> Result<(T, T)> {
        if self.p.im.is_zero() && self.q.im.is_zero() {
            Ok((self.p.re, self.q.re))
        } else {
            Err(Error::InvalidParameter("entry requires real p and q"))
        }
    }
}

fn c<T: Real>(re: T) -> Complex<T> {
    Complex::new(re, T::zero())
}

/// `sin(mπ/2)` and `cos(mπ/2)`, exactly.
fn quarter_turn<T: Real>(m: u32) -> (T, T) {
    let (o, z) = (T::one(), T::zero());
    match m % 4 {
        0 => (z, o),
        1 => (o, z),
        2 => (z, -o),
        _ => (-o, z),
    }
}

// ---------------------------------------------------------------------------
// Closed forms

/// `∫₀^π e^{±p′ cos x} cos(p′ sin x) dx = π` for every complex `p′`.
pub fn gr_3_931_4<T: Real>(_p: Complex<T>, _sign: Sign) -> Complex<T> {
    c(T::PI())
}

/// `π p′^m / (2 m!)` for `m > 0`, and `0` at `m = 0` where the table's
/// formula would give `π/2`.
pub fn gr_3_932_1<T: Real>(p: Complex<T>, m: u32) -> Complex<T> {
    if m == 0 {
        c(T::zero())
    } else {
        power_over_factorial(p, m) * T::FRAC_PI_2()
    }
}

/// `π p′^m / (2 m!)` for `m > 0`, and `π` at `m = 0`.
pub fn gr_3_932_2<T: Real>(p: Complex<T>, m: u32) -> Complex<T> {
    if m == 0 {
        c(T::PI())
    } else {
        power_over_factorial(p, m) * T::FRAC_PI_2()
    }
}

/// `2π p′^m / m!`, with `0^0 = 1`.
pub fn gr_3_936_1<T: Real>(p: Complex<T>, m: u32) -> Complex<T> {
    power_over_factorial(p, m) * T::TAU()
}

/// `2π p′^m / m! · sin(mπ/2)`, for any complex `p′`.
pub fn gr_3_936_2<T: Real>(p: Complex<T>, m: u32) -> Complex<T> {
    gr_3_936_1(p, m) * quarter_turn::<T>(m).0
}

/// `2π p′^m / m! · cos(mπ/2)`, for any complex `p′`.
pub fn gr_3_936_3<T: Real>(p: Complex<T>, m: u32) -> Complex<T> {
    gr_3_936_1(p, m) * quarter_turn::<T>(m).1
}

/// `∫₀^{2π} e^{p cos x} sin(p sin x ± mx) dx = 0`.
pub fn gr_3_936_4<T: Real>(_p: Complex<T>, _m: u32, _sign: Sign) -> Complex<T> {
    c(T::zero())
}

fn radial<T: Real>(p: T, q: T, m: u32) -> T {
    power_over_factorial(c(p.hypot(q)), m).re * T::TAU()
}

fn gr_3_937_original<T: Real>(p: T, q: T, m: u32, sine: bool) -> Result<Complex<T>> {
    if p.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let angle = T::of_u32(m) * (q / p).atan();
    Ok(c(
        radial(p, q, m) * if sine { angle.sin() } else { angle.cos() }
    ))
}

/// The table's `2π/m! (p²+q²)^{m/2} sin(m atan(q/p))`: wrong sign for odd
/// `m` and `p < 0`.
pub fn gr_3_937_3_original<T: Real>(p: T, q: T, m: u32) -> Result<Complex<T>> {
    gr_3_937_original(p, q, m, true)
}

/// The table's `2π/m! (p²+q²)^{m/2} cos(m atan(q/p))`.
pub fn gr_3_937_4_original<T: Real>(p: T, q: T, m: u32) -> Result<Complex<T>> {
    gr_3_937_original(p, q, m, false)
}

fn gr_3_937_corrected<T: Real>(p: T, q: T, m: u32, sine: bool) -> Complex<T> {
    if p.is_zero() && q.is_zero() {
        // Only the m = 0 cosine survives.
        let v = if m == 0 && !sine { T::TAU() } else { T::zero() };
        return c(v);
    }
    let angle = T::of_u32(m) * atan2_full(q, p).expect("nonzero");
    c(radial(p, q, m) * if sine { angle.sin() } else { angle.cos() })
}

/// `2π/m! (p²+q²)^{m/2} sin(m atan2(q, p))`.
pub fn gr_3_937_3_corrected<T: Real>(p: T, q: T, m: u32) -> Complex<T> {
    gr_3_937_corrected(p, q, m, true)
}

/// `2π/m! (p²+q²)^{m/2} cos(m atan2(q, p))`.
pub fn gr_3_937_4_corrected<T: Real>(p: T, q: T, m: u32) -> Complex<T> {
    gr_3_937_corrected(p, q, m, false)
}

/// The two bases `(p_R + q_I) + i(p_I − q_R) = p − iq` and
/// `(p_R − q_I) + i(p_I + q_R) = p + iq`, from components.
fn complex_bases<T: Real>(p: Complex<T>, q: Complex<T>) -> (Complex<T>, Complex<T>) {
    (
        Complex::new(p.re + q.im, p.im - q.re),
        Complex::new(p.re - q.im, p.im + q.re),
    )
}

/// `|z|^m e^{i m arg z}`, with `0^0 = 1`.
fn polar_power<T: Real>(z: Complex<T>, m: u32) -> Complex<T> {
    if is_zero(z) {
        return cpow_nonneg(z, m);
    }
    let theta = principal_arg(z).expect("nonzero") * T::of_u32(m);
    Complex::from_polar(z.norm_sqr().sqrt().powi(m as i32), theta)
}

/// The three displayed forms of the complex 3.937 results: from components,
/// in polar form, and as `(p ∓ iq)^m`. `sine` selects the 3.937-3 result.
pub fn gr_3_937_complex_forms<T: Real>(
    p: Complex<T>,
    q: Complex<T>,
    m: u32,
    sine: bool,
) -> [Complex<T>; 3] {
    let i = Complex::new(T::zero(), T::one());
    let (u, v) = complex_bases(p, q);
    let combine = |a: Complex<T>, b: Complex<T>| {
        let scale = power_over_factorial(c(T::one()), m) * T::PI();
        if sine {
            i * scale * (a - b)
        } else {
            scale * (a + b)
        }
    };
    [
        combine(cpow_nonneg(u, m), cpow_nonneg(v, m)),
        combine(polar_power(u, m), polar_power(v, m)),
        combine(cpow_nonneg(p - i * q, m), cpow_nonneg(p + i * q, m)),
    ]
}

/// `iπ/m! [(p − iq)^m − (p + iq)^m]`.
pub fn gr_3_937_3_complex<T: Real>(p: Complex<T>, q: Complex<T>, m: u32) -> Complex<T> {
    gr_3_937_complex_forms(p, q, m, true)[2]
}

/// `π/m! [(p − iq)^m + (p + iq)^m]`.
pub fn gr_3_937_4_complex<T: Real>(p: Complex<T>, q: Complex<T>, m: u32) -> Complex<T> {
    gr_3_937_complex_forms(p, q, m, false)[2]
}

/// The closed form of any entry.
pub fn closed_form<T: Real>(id: EntryId, args: &CatalogArgs<T>) -> Result<Complex<T>> {
    let CatalogArgs { p, q, m, sign } = *args;
    Ok(match id {
        EntryId::Gr3931_4 => gr_3_931_4(p, sign),
        EntryId::Gr3932_1 => gr_3_932_1(p, m),
        EntryId::Gr3932_2 => gr_3_932_2(p, m),
        EntryId::Gr3936_1 => gr_3_936_1(p, m),
        EntryId::Gr3936_2 => gr_3_936_2(p, m),
        EntryId::Gr3936_3 => gr_3_936_3(p, m),
        EntryId::Gr3936_4 => gr_3_936_4(p, m, sign),
        EntryId::Gr3937_3Original => {
            let (p, q) = args.real_parts()?;
            gr_3_937_3_original(p, q, m)?
        }
        EntryId::Gr3937_4Original => {
            let (p, q) = args.real_parts()?;
            gr_3_937_4_original(p, q, m)?
        }
        EntryId::Gr3937_3Corrected => {
            let (p, q) = args.real_parts()?;
            gr_3_937_3_corrected(p, q, m)
        }
        EntryId::Gr3937_4Corrected => {
            let (p, q) = args.real_parts()?;
            gr_3_937_4_corrected(p, q, m)
        }
        EntryId::Gr3937_3Complex => gr_3_937_3_complex(p, q, m),
        EntryId::Gr3937_4Complex => gr_3_937_4_complex(p, q, m),
    })
}

// ---------------------------------------------------------------------------
// Bindings to the general integrals

/// `coeff ·` (the general `kind` integral at `params`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Term<T> {
    pub coeff: T,
    pub kind: Kind,
    pub params: ComplexParams<T>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Binding<T> {
    pub terms: Vec<Term<T>>,
}

impl<T: Real> Binding<T> {
    /// Evaluates through the complex-parameter closed forms.
    pub fn evaluate(&self) -> Result<Complex<T>> {
        self.terms.iter().try_fold(c(T::zero()), |acc, t| {
            Ok(acc + eval_complex(&t.params, t.kind)?.value * t.coeff)
        })
    }

    /// Evaluates through the real-parameter closed forms, when every term
    /// has real parameters.
    pub fn evaluate_real(&self) -> Option<Result<Complex<T>>> {
        let reals: Option<Vec<_>> = self
            .terms
            .iter()
            .map(|t| t.params.to_real().map(|r| (t, r)))
            .collect();
        reals.map(|terms| {
            terms.into_iter().try_fold(c(T::zero()), |acc, (t, r)| {
                Ok(acc + eval_improved(&r, t.kind)?.value * t.coeff)
            })
        })
    }
}

/// Rewrites an entry as a combination of
/// `∫₀^{2π} exp(p cos x + q sin x) {sin,cos}(a cos x + b sin x − mx) dx`.
pub fn binding<T: Real>(id: EntryId, args: &CatalogArgs<T>) -> Binding<T> {
    let CatalogArgs { p, q, m, sign } = *args;
    let zero = c(T::zero());
    let (half, quarter, one) = (T::lit(0.5), T::lit(0.25), T::one());
    let term = |coeff: T, kind: Kind, pp, qq, aa, bb| Term {
        coeff,
        kind,
        params: ComplexParams::new(pp, qq, aa, bb, m),
    };
    let terms = match id {
        // e^{±p′ cos x} cos(p′ sin x): half of the full-period cosine integral
        EntryId::Gr3931_4 => {
            let p_exp = p * sign.value::<T>();
            vec![Term {
                coeff: half,
                kind: Kind::Cos,
                params: ComplexParams::new(p_exp, zero, zero, p, 0),
            }]
        }
        // sin θ sin φ and cos θ cos φ as [cos(θ−φ) ∓ cos(θ+φ)]/2, and
        // cos(p′ sin x + mx) = cos(−p′ sin x − mx)
        EntryId::Gr3932_1 | EntryId::Gr3932_2 => {
            let s = if id == EntryId::Gr3932_1 {
                -quarter
            } else {
                quarter
            };
            vec![
                term(quarter, Kind::Cos, p, zero, zero, p),
                term(s, Kind::Cos, p, zero, zero, -p),
            ]
        }
        EntryId::Gr3936_1 => vec![term(one, Kind::Cos, p, zero, zero, p)],
        // sin(p′ cos x + mx) = −sin(−p′ cos x − mx)
        EntryId::Gr3936_2 => vec![term(-one, Kind::Sin, zero, p, -p, zero)],
        EntryId::Gr3936_3 => vec![term(one, Kind::Cos, zero, p, -p, zero)],
        // sin(p sin x − mx) directly; sin(p sin x + mx) = −sin(−p sin x − mx)
        EntryId::Gr3936_4 => match sign {
            Sign::Minus => vec![term(one, Kind::Sin, p, zero, zero, p)],
            Sign::Plus => vec![term(-one, Kind::Sin, p, zero, zero, -p)],
        },
        // sin(q cos x − p sin x + mx) = −sin(−q cos x + p sin x − mx)
        EntryId::Gr3937_3Original | EntryId::Gr3937_3Corrected | EntryId::Gr3937_3Complex => {
            vec![term(-one, Kind::Sin, p, q, -q, p)]
        }
        EntryId::Gr3937_4Original | EntryId::Gr3937_4Corrected | EntryId::Gr3937_4Complex => {
            vec![term(one, Kind::Cos, p, q, -q, p)]
        }
    };
    Binding { terms }
}

// ---------------------------------------------------------------------------
// Direct integration

/// The entry's own integrand, as printed (generalised to complex arguments).
pub fn integrand<T: Real>(id: EntryId, args: &CatalogArgs<T>) -> impl Fn(T) -> Complex<T> {
    let CatalogArgs { p, q, m, sign } = *args;
    move |x: T| {
        let (s, co) = x.sin_cos();
        let mx = T::of_u32(m) * x;
        match id {
            EntryId::Gr3931_4 => (p * co * sign.value::<T>()).exp() * (p * s).cos(),
            EntryId::Gr3932_1 => (p * co).exp() * (p * s).sin() * mx.sin(),
            EntryId::Gr3932_2 => (p * co).exp() * (p * s).cos() * mx.cos(),
            EntryId::Gr3936_1 => (p * co).exp() * (p * s - mx).cos(),
            EntryId::Gr3936_2 => (p * s).exp() * (p * co + mx).sin(),
            EntryId::Gr3936_3 => (p * s).exp() * (p * co + mx).cos(),
            EntryId::Gr3936_4 => (p * co).exp() * (p * s + sign.value::<T>() * mx).sin(),
            _ => {
                let phase = q * co - p * s + mx;
                let weight = (p * co + q * s).exp();
                if id.is_sine() {
                    weight * phase.sin()
                } else {
                    weight * phase.cos()
                }
            }
        }
    }
}

/// The entry's value by quadrature over `range`: the native range directly,
/// or the other one scaled by the mirror symmetry about `π`.
pub fn oracle<T: Real>(
    id: EntryId,
    args: &CatalogArgs<T>,
    range: Range,
) -> Result<QuadratureResult<T>> {
    for z in [args.p, args.q] {
        crate::complex::check_finite(z, "catalog arguments")?;
    }
    if range != id.native_range() && !id.symmetric() {
        return Err(Error::InvalidParameter(
            "integrand is not symmetric about pi",
        ));
    }
    let magnitude = (T::lit(2.0) * (args.p.norm() + args.q.norm())).to_f64_lossy();
    if magnitude > ENVELOPE {
        return Err(Error::OutsideEnvelope {
            magnitude,
            limit: ENVELOPE,
        });
    }
    let bandwidth = T::lit(magnitude) + T::of_u32(args.m);
    let r = integrate(integrand(id, args), range, bandwidth)?;
    let scale = match (id.native_range(), range) {
        (Range::Half, Range::Full) => T::lit(0.5),
        (Range::Full, Range::Half) => T::lit(2.0),
        _ => T::one(),
    };
    Ok(QuadratureResult {
        value: r.value * scale,
        error_estimate: r.error_estimate * scale,
        ..r
    })
}
