//! Simulation and analysis of the tradeoff between how reliable a weak
//! quantum measurement is and how reversible its dynamics remain.
//!
//! The model: a qubit is amplified by N qutrits into a harmonic-oscillator
//! "counter" carrying a coherent amplitude of ±Nε, an observer taps a
//! fraction η of the counter energy into a probe oscillator and performs
//! the optimal two-coherent-state discrimination on it, and the premeasurement
//! unitary is then undone. The crate provides
//!
//! - [`coherent`]: coherent-state overlaps and optimal binary discrimination,
//! - [`branch`]: exact pure-state evolution in a branch representation,
//! - [`fock`]: a truncated number-basis oracle that re-derives everything by
//!   brute force (test/verification use only),
//! - [`protocol`]: the seeded Alice–Bob Monte Carlo game,
//! - [`analysis`]: closed forms, sweeps, the optimal-strength solver, mutual
//!   information and the observer-count bound.

pub mod analysis;
pub mod branch;
pub mod coherent;
pub mod error;
pub mod fock;
pub mod protocol;

pub use error::{Error, Result};
