//! Design library for superconducting microwave resonators and parametric
//! amplifiers.
//!
//! The crate covers the analytical layer of a readout-chain design flow:
//!
//! - [`cpw`] — coplanar-waveguide conformal-mapping analysis, inverse gap
//!   synthesis, and resonance frequency/length relations,
//! - [`resonator`] — quality-factor algebra, feedline coupling quantities,
//!   and the side-coupled dip response,
//! - [`nonlinear`] — kinetic and Josephson inductance evaluation,
//! - [`paramp`] — quantum-limited amplifier figures of merit and a cascaded
//!   noise budget,
//! - [`math`] — the elliptic-integral oracle and dB conversions,
//! - [`constants`], [`quantities`] — CODATA 2018 constants and unit-carrying
//!   scalar types.
//!
//! All values are SI base units. Every function is pure; all types are
//! immutable after construction and safe to share across threads.

pub mod constants;
pub mod cpw;
pub mod error;
pub mod math;
pub mod nonlinear;
pub mod paramp;
pub mod quantities;
pub mod resonator;

pub use error::{Error, Result};
pub use quantities::{Capacitance, Current, Frequency, Impedance, Inductance, Length, Temperature};
