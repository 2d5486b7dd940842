use thiserror::Error;

/// Failures raised by the scattering, force and scan routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Inverse of a jet whose zeroth-order part vanishes.
    #[error("division by a jet with zero value part")]
    DivisionByZeroVal,

    /// The multiple-reflection series does not converge: |r ζ / (1 - iζ)| >= 1.
    #[error("round-trip ratio {ratio} >= 1, multiple-reflection series diverges")]
    NonConvergent { ratio: f64 },

    /// The resonance denominator 1 - iζ - r iζ e^{-2ik0x} vanishes.
    #[error("resonance denominator vanishes at k0x = {k0x}")]
    SingularDenominator { k0x: f64 },

    /// Inputs outside the regime in which a formula holds.
    #[error("unsupported regime: {0}")]
    UnsupportedRegime(String),

    /// A friction scan found no position with positive friction.
    #[error("friction is non-positive over the whole position window")]
    NoCoolingPoint,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
