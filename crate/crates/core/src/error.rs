use thiserror::Error;

/// Everything that can go wrong while evaluating an integral, a series or a
/// predicate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("argument of zero is undefined")]
    ZeroArgument,

    #[error("zero raised to the non-positive power {0}")]
    ZeroToNonPositivePower(i64),

    #[error("Y=0: original formula inapplicable ((b-p)^2 + (a+q)^2 = 0)")]
    YIsZero,

    #[error("atan(q/p) form requires p != 0")]
    ZeroDenominator,

    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),

    #[error("non-finite input: {0}")]
    NonFinite(&'static str),

    #[error("series did not converge within {terms} terms")]
    SeriesNonConvergence { terms: usize },

    #[error("series overflowed after {terms} terms")]
    SeriesOverflow { terms: usize },

    #[error("quadrature did not converge with {nodes} nodes (last change {error_estimate:e})")]
    QuadratureNonConvergence { nodes: usize, error_estimate: f64 },

    #[error("parameter magnitude {magnitude} exceeds the oracle envelope {limit}")]
    OutsideEnvelope { magnitude: f64, limit: f64 },

    #[error("imaginary residue {residue:e} of a real-valued result exceeds {tolerance:e}")]
    ImaginaryResidue { residue: f64, tolerance: f64 },
}

impl Error {
    /// True for errors caused by the inputs lying outside an operation's
    /// domain, as opposed to numerical failures.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::ZeroArgument
                | Error::ZeroToNonPositivePower(_)
                | Error::YIsZero
                | Error::ZeroDenominator
                | Error::NonFinite(_)
                | Error::InvalidParameter(_)
                | Error::OutsideEnvelope { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
