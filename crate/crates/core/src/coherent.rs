//! Coherent-state overlaps and optimal discrimination of two coherent states.
//!
//! Overlaps are kept in log-magnitude/phase form: `exp(-2 N^2 eps^2)`
//! underflows an f64 once `N*eps` exceeds roughly 19, while the log form is
//! exact for any separation. Linear-domain access is provided and is lossy
//! below about 1e-300.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

/// Overlaps within this distance of 1 are treated as carrying no
/// distinguishing information (see [`make_discrimination`]).
pub const DEGENERATE_TOL: f64 = 1e-9;

/// Dimensionless amplitude of an oscillator coherent state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoherentAmplitude(Complex64);

impl CoherentAmplitude {
    pub fn new(value: Complex64) -> Result<Self> {
        if value.re.is_finite() && value.im.is_finite() {
            Ok(Self(value))
        } else {
            Err(Error::NonFiniteAmplitude(format!("{value}")))
        }
    }

    /// Amplitude on the real axis, the only kind the protocol produces.
    pub fn real(value: f64) -> Self {
        Self::new(Complex64::new(value, 0.0)).expect("finite real amplitude")
    }

    pub fn zero() -> Self {
        Self(Complex64::new(0.0, 0.0))
    }

    pub fn value(self) -> Complex64 {
        self.0
    }

    pub(crate) fn raw(value: Complex64) -> Self {
        debug_assert!(value.re.is_finite() && value.im.is_finite());
        Self(value)
    }
}

/// Inner product of two coherent states, stored as log|z| and arg(z).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OverlapScalar {
    /// Natural log of the modulus; never positive for coherent-state overlaps.
    pub log_magnitude: f64,
    /// Phase in radians.
    pub phase: f64,
}

impl OverlapScalar {
    /// The overlap as an ordinary complex number. Underflows to 0 when
    /// `log_magnitude` is below about -709.
    pub fn linear(self) -> Complex64 {
        Complex64::from_polar(self.log_magnitude.exp(), self.phase)
    }

    pub fn unit() -> Self {
        Self { log_magnitude: 0.0, phase: 0.0 }
    }
}

/// `<alpha|beta> = exp(-|alpha|^2/2 - |beta|^2/2 + conj(alpha) beta)`.
///
/// Exact in log domain for all magnitudes; `coherent_overlap(a, a)` is the
/// unit overlap with no rounding.
pub fn coherent_overlap(alpha: CoherentAmplitude, beta: CoherentAmplitude) -> OverlapScalar {
    let a = alpha.value();
    let b = beta.value();
    let cross = a.conj() * b;
    OverlapScalar {
        log_magnitude: cross.re - a.norm_sqr() / 2.0 - b.norm_sqr() / 2.0,
        phase: cross.im,
    }
}

/// Physical configuration: qutrit count, kick size, counter frequency and
/// the tap fractions of Bob (`bob_eta`) and any other observers.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ModelParams {
    n_qutrits: u32,
    epsilon: f64,
    omega: f64,
    bob_eta: f64,
    other_etas: Vec<f64>,
}

impl ModelParams {
    pub fn new(
        n_qutrits: u32,
        epsilon: f64,
        omega: f64,
        bob_eta: f64,
        other_etas: Vec<f64>,
    ) -> Result<Self> {
        if n_qutrits == 0 {
            return Err(Error::InvalidParams("n_qutrits must be at least 1".into()));
        }
        if !epsilon.is_finite() || epsilon < 0.0 {
            return Err(Error::InvalidParams(format!(
                "epsilon must be finite and nonnegative, got {epsilon}"
            )));
        }
        if !omega.is_finite() || omega < 0.0 {
            return Err(Error::InvalidParams(format!(
                "omega must be finite and nonnegative, got {omega}"
            )));
        }
        if !(0.0..=1.0).contains(&bob_eta) {
            return Err(Error::EtaOutOfRange(bob_eta));
        }
        for &eta in &other_etas {
            if !(eta > 0.0 && eta <= 1.0) {
                return Err(Error::InvalidParams(format!(
                    "observer fraction must lie in (0, 1], got {eta}"
                )));
            }
        }
        let total = bob_eta + other_etas.iter().sum::<f64>();
        if total > 1.0 {
            return Err(Error::TappedFractionExceedsUnity(total));
        }
        Ok(Self { n_qutrits, epsilon, omega, bob_eta, other_etas })
    }

    /// Single-observer configuration (no silent taps).
    pub fn single_observer(n_qutrits: u32, epsilon: f64, bob_eta: f64) -> Result<Self> {
        Self::new(n_qutrits, epsilon, 0.0, bob_eta, Vec::new())
    }

    pub fn n_qutrits(&self) -> u32 {
        self.n_qutrits
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn bob_eta(&self) -> f64 {
        self.bob_eta
    }

    pub fn other_etas(&self) -> &[f64] {
        &self.other_etas
    }

    /// The counter displacement reached after the premeasurement.
    pub fn n_epsilon(&self) -> f64 {
        f64::from(self.n_qutrits) * self.epsilon
    }

    /// Combined tapped fraction of every observer including Bob.
    pub fn eta_total(&self) -> f64 {
        self.bob_eta + self.eta_tilde()
    }

    /// Combined tapped fraction of the observers other than Bob.
    pub fn eta_tilde(&self) -> f64 {
        self.other_etas.iter().sum()
    }

    /// ln c0 = -2 (N eps)^2; exact even where c0 itself underflows.
    pub fn log_c0(&self) -> f64 {
        let ne = self.n_epsilon();
        -2.0 * ne * ne
    }
}

/// `c0 = exp(-2 N^2 eps^2)`, the minimum overlap reachable at full strength.
pub fn c0_of(params: &ModelParams) -> f64 {
    params.log_c0().exp()
}

/// `c(eta) = c0^eta`, the overlap of the two probe states at strength `eta`.
pub fn c_of_eta(c0: f64, eta: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&eta) {
        return Err(Error::EtaOutOfRange(eta));
    }
    if !(c0 > 0.0 && c0 <= 1.0) {
        return Err(Error::OverlapOutOfRange(c0));
    }
    Ok((eta * c0.ln()).exp())
}

/// Optimal projective discrimination of two pure states with real overlap `c`.
///
/// The projectors straddle the states symmetrically:
/// `|+-> = gamma |+-A> - beta |-+A>` with the coefficients below, and the
/// wrong outcome occurs with probability `(1 - sqrt(1 - c^2)) / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DiscriminationSpec {
    pub c: f64,
    pub gamma: f64,
    pub beta_coef: f64,
    pub p_error: f64,
}

/// Build the optimal two-state discrimination for overlap `c`.
///
/// Fails with [`Error::DegenerateDiscrimination`] when `c` is within
/// [`DEGENERATE_TOL`] of 1: the coefficients diverge there and the caller is
/// expected to fall back to a fair coin with no state change. Values outside
/// [0, 1] by more than 1e-12 are rejected; closer excursions are clamped.
pub fn make_discrimination(c: f64) -> Result<DiscriminationSpec> {
    if !c.is_finite() || c < -1e-12 || c > 1.0 + 1e-12 {
        return Err(Error::OverlapOutOfRange(c));
    }
    let c = c.clamp(0.0, 1.0);
    if c > 1.0 - DEGENERATE_TOL {
        return Err(Error::DegenerateDiscrimination { c, tol: DEGENERATE_TOL });
    }
    let sp = (1.0 + c).sqrt();
    let sm = (1.0 - c).sqrt();
    // sqrt(1 - c^2) without re-squaring c
    let root = sp * sm;
    Ok(DiscriminationSpec {
        c,
        gamma: (sp + sm) / (2.0 * root),
        beta_coef: (sp - sm) / (2.0 * root),
        // c^2 / (2 (1 + root)) == (1 - root) / 2, stable for c -> 0
        p_error: c * c / (2.0 * (1.0 + root)),
    })
}

/// Projection amplitudes of the two input states onto the `+` projector:
/// `<+|+A> = gamma - beta c` and `<+|-A> = gamma c - beta`.
///
/// Their squares are `1 - p_error` and `p_error`; by symmetry the same pair
/// serves the `-` projector with the roles of the inputs exchanged.
pub fn projection_amplitudes(spec: &DiscriminationSpec) -> (f64, f64) {
    // Algebraically (sqrt(1+c) +- sqrt(1-c)) / 2, which stays fully
    // accurate where gamma and beta_coef individually blow up.
    let sp = (1.0 + spec.c).sqrt();
    let sm = (1.0 - spec.c).sqrt();
    ((sp + sm) / 2.0, (sp - sm) / 2.0)
}
