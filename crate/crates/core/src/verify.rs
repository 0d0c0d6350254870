//! Seeded sampling and the cross-checks behind `verify`.

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::catalog::{
    binding, closed_form, gr_3_937_complex_forms, oracle, CatalogArgs, EntryId, Sign,
};
use crate::error::Error;
use crate::formulas::{eval_complex, eval_corrected_original, eval_improved, Kind};
use crate::params::{ComplexParams, RealParams};
use crate::quadrature::{oracle_cos, oracle_sin, Range};

/// `|a - b| <= max(rtol·|b|, atol)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub rtol: f64,
    pub atol: f64,
}

impl Tolerance {
    pub const REAL: Tolerance = Tolerance {
        rtol: 1e-10,
        atol: 1e-12,
    };
    pub const COMPLEX: Tolerance = Tolerance {
        rtol: 1e-9,
        atol: 1e-11,
    };

    /// Relative error with the denominator floored at `atol/rtol`, so that
    /// `error(a, b) <= rtol` is exactly the acceptance test.
    pub fn error(&self, a: Complex<f64>, b: Complex<f64>) -> f64 {
        (a - b).norm() / b.norm().max(self.atol / self.rtol)
    }

    pub fn accepts(&self, a: Complex<f64>, b: Complex<f64>) -> bool {
        self.error(a, b) <= self.rtol
    }

    pub fn with_rtol(self, rtol: f64) -> Self {
        Tolerance {
            atol: self.atol * rtol / self.rtol,
            rtol,
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform in `[-bound, bound]` per coefficient, `m` uniform in `0..=max_m`.
pub fn random_real_params(rng: &mut impl Rng, bound: f64, max_m: u32) -> RealParams<f64> {
    let mut draw = || rng.gen_range(-bound..=bound);
    let (p, q, a, b) = (draw(), draw(), draw(), draw());
    RealParams::new(p, q, a, b, rng.gen_range(0..=max_m))
}

/// Uniform real and imaginary parts in `[-bound, bound]`.
pub fn random_complex_params(rng: &mut impl Rng, bound: f64, max_m: u32) -> ComplexParams<f64> {
    let mut draw = || Complex::new(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound));
    let (p, q, a, b) = (draw(), draw(), draw(), draw());
    ComplexParams::new(p, q, a, b, rng.gen_range(0..=max_m))
}

/// Points that exercise the equality branches of the sign-error predicates:
/// a quarter are continuous draws, the rest sit on the half-integer lattice
/// in `[-5, 5]`, a third of those on the lines `a = ±q`.
pub fn random_boundary_params(rng: &mut impl Rng) -> RealParams<f64> {
    if rng.gen_range(0..4) == 0 {
        return random_real_params(rng, 5.0, 8);
    }
    let mut lattice = || f64::from(rng.gen_range(-10i32..=10)) / 2.0;
    let (p, q, mut a, b) = (lattice(), lattice(), lattice(), lattice());
    match rng.gen_range(0..6) {
        0 => a = q,
        1 => a = -q,
        _ => {}
    }
    RealParams::new(p, q, a, b, rng.gen_range(0..=8))
}

#[derive(Debug, Clone, PartialEq)]
pub struct RandomReport {
    pub samples: usize,
    pub complex: bool,
    pub max_error: f64,
    /// Corrected-original evaluations compared against the improved forms.
    pub corrected_checked: usize,
    pub corrected_max_error: f64,
    pub failures: Vec<String>,
}

impl RandomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct PointOutcome {
    error: f64,
    corrected_error: Option<f64>,
    failure: Option<String>,
}

fn real_point(params: &RealParams<f64>, tol: Tolerance) -> PointOutcome {
    let cp = params.to_complex();
    let mut error = 0.0_f64;
    let mut corrected_error = None;
    let mut failure = None;
    for (kind, truth) in [(Kind::Sin, oracle_sin(&cp)), (Kind::Cos, oracle_cos(&cp))] {
        let outcome = truth.and_then(|t| eval_improved(params, kind).map(|v| (v.value, t.value)));
        match outcome {
            Ok((value, truth)) => {
                let e = tol.error(value, truth);
                error = error.max(e);
                if e > tol.rtol {
                    failure = Some(format!(
                        "{} {params:?}: {value} vs oracle {truth}",
                        kind.as_str()
                    ));
                }
                if !params.y_is_zero() {
                    if let Ok(fixed) = eval_corrected_original(params, kind) {
                        let e = Tolerance::REAL
                            .with_rtol(tol.rtol)
                            .error(fixed.value, value);
                        corrected_error = Some(corrected_error.unwrap_or(0.0_f64).max(e));
                        if e > tol.rtol {
                            failure = Some(format!(
                                "corrected {} {params:?}: {} vs {value}",
                                kind.as_str(),
                                fixed.value
                            ));
                        }
                    }
                }
            }
            Err(e) => failure = Some(format!("{} {params:?}: {e}", kind.as_str())),
        }
    }
    PointOutcome {
        error,
        corrected_error,
        failure,
    }
}

fn complex_point(params: &ComplexParams<f64>, tol: Tolerance) -> PointOutcome {
    let mut error = 0.0_f64;
    let mut failure = None;
    for (kind, truth) in [
        (Kind::Sin, oracle_sin(params)),
        (Kind::Cos, oracle_cos(params)),
    ] {
        match truth.and_then(|t| eval_complex(params, kind).map(|v| (v.value, t.value))) {
            Ok((value, truth)) => {
                let e = tol.error(value, truth);
                error = error.max(e);
                if e > tol.rtol {
                    failure = Some(format!(
                        "{} {params:?}: {value} vs oracle {truth}",
                        kind.as_str()
                    ));
                }
            }
            Err(e) => failure = Some(format!("{} {params:?}: {e}", kind.as_str())),
        }
    }
    PointOutcome {
        error,
        corrected_error: None,
        failure,
    }
}

/// Closed forms against the oracle at `samples` seeded random points:
/// real parameters in `[-5, 5]` with `m <= 8`, or complex parameters with
/// components in `[-3, 3]` and `m <= 6`.
pub fn random_cross_check(
    seed: u64,
    samples: usize,
    complex: bool,
    tol: Tolerance,
) -> RandomReport {
    let mut rng = rng(seed);
    let outcomes: Vec<PointOutcome> = if complex {
        let points: Vec<_> = (0..samples)
            .map(|_| random_complex_params(&mut rng, 3.0, 6))
            .collect();
        points.par_iter().map(|p| complex_point(p, tol)).collect()
    } else {
        let points: Vec<_> = (0..samples)
            .map(|_| random_real_params(&mut rng, 5.0, 8))
            .collect();
        points.par_iter().map(|p| real_point(p, tol)).collect()
    };
    let corrected: Vec<f64> = outcomes.iter().filter_map(|o| o.corrected_error).collect();
    RandomReport {
        samples,
        complex,
        max_error: outcomes.iter().map(|o| o.error).fold(0.0, f64::max),
        corrected_checked: corrected.len(),
        corrected_max_error: corrected.into_iter().fold(0.0, f64::max),
        failures: outcomes.into_iter().filter_map(|o| o.failure).collect(),
    }
}

// ---------------------------------------------------------------------------
// Catalog

/// The argument grid an entry is verified on. With `p_negative`, the real
/// 3.937 entries are sampled at `p < 0` only, where the table's `atan` form
/// is expected to be wrong for odd `m`.
pub fn catalog_samples(id: EntryId, p_negative: bool) -> Vec<CatalogArgs<f64>> {
    let z = Complex::new;
    let zero = z(0.0, 0.0);
    let with = |ps: &[Complex<f64>],
                qs: &[Complex<f64>],
                ms: std::ops::RangeInclusive<u32>,
                signs: &[Sign]| {
        let mut out = Vec::new();
        for &p in ps {
            for &q in qs {
                for m in ms.clone() {
                    for &sign in signs {
                        out.push(CatalogArgs::new(p, q, m, sign));
                    }
                }
            }
        }
        out
    };
    let both = [Sign::Plus, Sign::Minus];
    let minus = [Sign::Minus];
    match id {
        EntryId::Gr3931_4 => with(
            &[zero, z(1.0, 0.0), z(-2.0, 0.0), z(2.0, -3.0)],
            &[zero],
            0..=0,
            &both,
        ),
        EntryId::Gr3932_1 | EntryId::Gr3932_2 => with(
            &[z(1.0, 0.0), z(-2.0, 0.0), zero, z(1.0, 1.0), z(2.0, 0.0)],
            &[zero],
            0..=3,
            &minus,
        ),
        EntryId::Gr3936_1 => with(
            &[z(1.0, 0.0), z(0.0, 1.0), z(-1.5, 0.0), z(0.5, 0.5), zero],
            &[zero],
            0..=5,
            &minus,
        ),
        EntryId::Gr3936_2 | EntryId::Gr3936_3 => with(
            &[z(-2.0, 0.0), zero, z(1.0, 1.0), z(1.0, 0.0)],
            &[zero],
            0..=4,
            &minus,
        ),
        EntryId::Gr3936_4 => with(
            &[z(1.0, 0.0), z(-2.0, 1.0), zero, z(0.5, -1.5)],
            &[zero],
            0..=5,
            &both,
        ),
        EntryId::Gr3937_3Original
        | EntryId::Gr3937_4Original
        | EntryId::Gr3937_3Corrected
        | EntryId::Gr3937_4Corrected => {
            let ps: &[f64] = if p_negative {
                &[-2.0, -1.0, -0.5]
            } else {
                &[-2.0, 0.0, 1.0]
            };
            let ps: Vec<_> = ps.iter().map(|&p| z(p, 0.0)).collect();
            with(&ps, &[z(-1.0, 0.0), zero, z(2.0, 0.0)], 0..=4, &minus)
        }
        EntryId::Gr3937_3Complex | EntryId::Gr3937_4Complex => with(
            &[z(1.0, 1.0), z(0.0, 1.0), z(-0.5, 2.0), z(2.0, 0.0), zero],
            &[z(1.0, 0.0), z(-1.0, 0.5), zero, z(0.0, 1.5)],
            0..=4,
            &minus,
        ),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EntryReport {
    pub id: EntryId,
    pub points: usize,
    /// Points where the closed form does not exist (`atan(q/0)`).
    pub inapplicable: usize,
    /// Points where the closed form equals the negated true value.
    pub sign_flips: usize,
    /// Largest error over every comparison, in units of the tolerance's
    /// floored relative error.
    pub max_error: f64,
    pub failures: Vec<String>,
}

impl EntryReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn is_original(id: EntryId) -> bool {
    matches!(id, EntryId::Gr3937_3Original | EntryId::Gr3937_4Original)
}

/// Whether the table form is predicted to carry a sign error at `args`.
pub fn predicted_flip(id: EntryId, args: &CatalogArgs<f64>) -> bool {
    is_original(id) && args.p.re < 0.0 && args.m % 2 == 1
}

enum Check {
    Inapplicable,
    Done {
        error: f64,
        flipped: bool,
        failure: Option<String>,
    },
}

fn check_point(id: EntryId, args: &CatalogArgs<f64>, tol: Tolerance) -> Check {
    let closed = match closed_form(id, args) {
        Ok(v) => v,
        Err(Error::ZeroDenominator) => return Check::Inapplicable,
        Err(e) => {
            return Check::Done {
                error: f64::INFINITY,
                flipped: false,
                failure: Some(format!("{args:?}: {e}")),
            }
        }
    };
    let mut acc = Findings::default();

    let truth = match oracle(id, args, id.native_range()) {
        Ok(r) => r.value,
        Err(e) => {
            return Check::Done {
                error: f64::INFINITY,
                flipped: false,
                failure: Some(format!("{args:?}: {e}")),
            }
        }
    };
    // A sign error is visible only where the value is not (near) zero.
    let flipped = !tol.accepts(closed, truth) && tol.accepts(-closed, truth);
    let expected = predicted_flip(id, args);
    if flipped != expected && !(expected && tol.accepts(closed, truth)) {
        acc.fail(format!(
            "{args:?}: sign flip {flipped}, predicted {expected}: {closed} vs oracle {truth}"
        ));
    }
    let corrected = if expected { -closed } else { closed };
    acc.compare("closed form vs oracle", args, corrected, truth, tol);

    if id.symmetric() {
        let other = if id.native_range() == Range::Half {
            Range::Full
        } else {
            Range::Half
        };
        match oracle(id, args, other) {
            Ok(r) => acc.compare("other-range oracle", args, r.value, truth, tol),
            Err(e) => acc.fail(format!("{args:?}: {e}")),
        }
    }

    let bind = binding(id, args);
    match bind.evaluate() {
        Ok(general) => {
            acc.compare("general closed form", args, corrected, general, tol);
            if let Some(Ok(real)) = bind.evaluate_real() {
                acc.compare("real vs complex general form", args, real, general, tol);
            }
        }
        Err(e) => acc.fail(format!("{args:?}: {e}")),
    }
    if matches!(id, EntryId::Gr3937_3Complex | EntryId::Gr3937_4Complex) {
        let [a, b, c] =
            gr_3_937_complex_forms(args.p, args.q, args.m, id == EntryId::Gr3937_3Complex);
        let tight = tol.with_rtol(1e-12);
        acc.compare("component form", args, a, c, tight);
        acc.compare("polar form", args, b, c, tight);
    }
    Check::Done {
        error: acc.error,
        flipped,
        failure: acc.failure,
    }
}

#[derive(Default)]
struct Findings {
    error: f64,
    failure: Option<String>,
}

impl Findings {
    fn fail(&mut self, message: String) {
        self.failure.get_or_insert(message);
    }

    fn compare(
        &mut self,
        what: &str,
        args: &CatalogArgs<f64>,
        got: Complex<f64>,
        want: Complex<f64>,
        tol: Tolerance,
    ) {
        let e = tol.error(got, want);
        self.error = self.error.max(e);
        if e > tol.rtol {
            self.fail(format!("{what} at {args:?}: {got} vs {want}"));
        }
    }
}

pub fn verify_entry(id: EntryId, p_negative: bool, tol: Tolerance) -> EntryReport {
    let samples = catalog_samples(id, p_negative);
    let checks: Vec<Check> = samples
        .par_iter()
        .map(|a| check_point(id, a, tol))
        .collect();
    let mut report = EntryReport {
        id,
        points: samples.len(),
        inapplicable: 0,
        sign_flips: 0,
        max_error: 0.0,
        failures: Vec::new(),
    };
    for check in checks {
        match check {
            Check::Inapplicable => report.inapplicable += 1,
            Check::Done {
                error,
                flipped,
                failure,
            } => {
                report.max_error = report.max_error.max(error);
                report.sign_flips += usize::from(flipped);
                report.failures.extend(failure);
            }
        }
    }
    report
}
