//! Spectral topology of one-dimensional quasiperiodic chains.
//!
//! The crate builds Harper-type tight-binding chains at rational flux
//! p/q, diagonalizes them over the (θ, φ) twist/phason torus, and
//! extracts the topological structure of the spectrum:
//!
//! - per-gap Chern numbers, computed three independent ways
//!   (discretized Berry curvature, the gap-labeling congruence, and the
//!   large-λ localization-center pairing rule),
//! - band-edge wavefunction structure (parity, Fibonacci peak
//!   hierarchy, Chern doublets, smooth windows, standing-wave beats),
//! - momentum distributions of single states and filled seas,
//! - Majorana edge physics of the associated p-wave superconducting
//!   chain, including the delocalized zero mode at the transition.
//!
//! All builders are pure and all analysis runs on immutable values, so
//! everything here is safe to call from parallel sweeps.

pub mod approximant;
pub mod error;
pub mod majorana;
pub mod model;
pub mod momentum;
pub mod spectra;
pub mod states;
pub mod topology;

pub use error::{Error, Result};
