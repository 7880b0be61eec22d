use thiserror::Error;

use crate::exactfield::Rational;

/// Errors raised anywhere in the engine.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid extension: {0}")]
    InvalidExtension(String),

    #[error("division by zero")]
    DivisionByZero,

    /// Inverting a nonzero element exposed a proper factor of a minimal polynomial.
    #[error("minimal polynomial of `{generator}` is reducible: found factor {factor}")]
    Reducible { generator: String, factor: String },

    #[error("field tower mismatch: {left} vs {right}")]
    TowerMismatch { left: String, right: String },

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    /// Division by a series whose constant term vanishes.
    #[error("series has valuation {valuation} at 0; use RadicalSeries for shifted division")]
    Valuation { valuation: usize },

    #[error("composition requires an inner series without constant term")]
    Composition,

    #[error("rational power needs a unit constant term, found {found}")]
    Normalization { found: String },

    #[error("exponent offsets {left} and {right} do not differ by an integer")]
    OffsetMismatch { left: Rational, right: Rational },

    #[error("lower parameter {0} is a non-positive integer")]
    ForbiddenLowerParameter(Rational),

    #[error("expected {expected_upper} upper and {expected_lower} lower parameters, got {upper} and {lower}")]
    Arity {
        expected_upper: usize,
        expected_lower: usize,
        upper: usize,
        lower: usize,
    },

    #[error("local exponents at {point} differ by the integer {difference}")]
    DegenerateBasis { point: String, difference: Rational },

    #[error("contiguity operator divides by zero ({0})")]
    ContiguityPole(String),

    #[error("numerator and denominator are not coprime")]
    NotCoprime,

    #[error("inconsistent branching pattern: {0}")]
    InconsistentPattern(String),

    #[error("point is not on the curve: {0}")]
    NotOnCurve(String),

    #[error("invalid curve: {0}")]
    BadCurve(String),

    #[error("local expansion is not available at {0}")]
    UnsupportedPoint(String),

    #[error("linear system is rank deficient: rank {rank} < {needed}")]
    RankDeficient { rank: usize, needed: usize },

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
