//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("amplitude must be finite, got {0}")]
    NonFiniteAmplitude(String),

    #[error("measurement strength eta must lie in [0, 1], got {0}")]
    EtaOutOfRange(f64),

    #[error("overlap c must lie in [0, 1], got {0}")]
    OverlapOutOfRange(f64),

    #[error("degenerate discrimination: overlap {c} is within {tol} of 1, the two states carry no distinguishing information")]
    DegenerateDiscrimination { c: f64, tol: f64 },

    #[error("invalid model parameters: {0}")]
    InvalidParams(String),

    #[error("tapped fractions sum to {0}, exceeding the counter's total energy")]
    TappedFractionExceedsUnity(f64),

    #[error("input state is not normalized: |a|^2 + |b|^2 = {0}")]
    NotNormalized(f64),

    #[error("qutrits are not in the ready state; the premeasurement has already been applied")]
    QutritsNotReady,

    #[error("reversal requested before the premeasurement correlated the qutrits")]
    ReversalBeforePremeasurement,

    #[error("mode {0:?} already exists in the register layout")]
    DuplicateMode(String),

    #[error("no mode named {0:?} in the register layout")]
    UnknownMode(String),

    #[error("no qubit named {0:?} in the register layout")]
    UnknownQubit(String),

    #[error("probe {mode:?} does not carry two symmetric real amplitudes: {detail}")]
    ProbeNotSymmetric { mode: String, detail: String },

    #[error("state norm collapsed to zero during projection")]
    ZeroNorm,

    #[error("error probability bound p must lie in (0, 1/4), got {0}")]
    ObserverBoundUndefined(f64),

    #[error("Fock cutoff insufficient: {0}")]
    CutoffInsufficient(String),
}
