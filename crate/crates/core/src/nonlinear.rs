//! Nonlinear inductance elements: current-biased kinetic inductance of thin
//! superconducting films and the Josephson junction relations.
//!
//! Both mechanisms are evaluated as quasi-static inductances. The kinetic
//! model keeps the quadratic term of the bias expansion only, so the
//! (L_k0, I*) and (L_k0, α) parameterizations are the same model with
//! α = 1/I*².

use std::f64::consts::TAU;

use crate::constants::FLUX_QUANTUM;
use crate::error::{Error, Result};
use crate::quantities::{Current, Inductance};

/// Below this |cos φ| the junction inductance is reported as divergent
/// instead of returning an arbitrarily large number.
pub const EPS_COS: f64 = 1e-9;

/// Thin-film kinetic inductance parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KineticInductanceParams {
    /// Zero-bias kinetic inductance (H).
    pub l_k0: f64,
    /// Characteristic current scale (A).
    pub i_star: f64,
}

impl KineticInductanceParams {
    pub fn new(l_k0: f64, i_star: f64) -> Result<Self> {
        if !(l_k0.is_finite() && l_k0 > 0.0) {
            return Err(Error::Domain(format!(
                "zero-bias kinetic inductance must be positive, got {l_k0} H"
            )));
        }
        if !(i_star.is_finite() && i_star > 0.0) {
            return Err(Error::Domain(format!(
                "characteristic current scale must be positive, got {i_star} A"
            )));
        }
        Ok(Self { l_k0, i_star })
    }

    /// Equivalent parameterization via the nonlinearity coefficient
    /// α = 1/I*² (1/A²).
    pub fn from_alpha(l_k0: f64, alpha: f64) -> Result<Self> {
        if !(alpha.is_finite() && alpha > 0.0) {
            return Err(Error::Domain(format!(
                "nonlinearity coefficient must be positive, got {alpha} 1/A^2"
            )));
        }
        Self::new(l_k0, 1.0 / alpha.sqrt())
    }

    /// Nonlinearity coefficient α = 1/I*² (1/A²).
    pub fn alpha(&self) -> f64 {
        1.0 / (self.i_star * self.i_star)
    }
}

/// Josephson junction operating point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JunctionParams {
    /// Critical current (A).
    pub i_c: f64,
    /// Superconducting phase difference across the junction (rad), signed.
    pub phi: f64,
}

impl JunctionParams {
    pub fn new(i_c: f64, phi: f64) -> Result<Self> {
        if !(i_c.is_finite() && i_c > 0.0) {
            return Err(Error::Domain(format!(
                "critical current must be positive, got {i_c} A"
            )));
        }
        if !phi.is_finite() {
            return Err(Error::Domain(format!("phase must be finite, got {phi} rad")));
        }
        Ok(Self { i_c, phi })
    }
}

/// Current-dependent kinetic inductance L_k0 · (1 + i²/I*²).
///
/// Even in the bias current and non-decreasing in |i|; higher-order terms of
/// the pair-breaking expansion are not modeled.
pub fn kinetic_inductance(p: &KineticInductanceParams, i: Current) -> Inductance {
    let x = i.amperes() / p.i_star;
    Inductance::raw(p.l_k0 * (1.0 + x * x))
}

/// Supercurrent through the junction, I_c · sin φ.
pub fn josephson_current(p: &JunctionParams) -> Current {
    Current::new(p.i_c * p.phi.sin()).expect("finite by construction")
}

/// Junction voltage for a given phase rate, (Φ0/2π) · dφ/dt. Volts.
pub fn josephson_voltage(dphi_dt: f64) -> f64 {
    FLUX_QUANTUM / TAU * dphi_dt
}

/// Josephson inductance Φ0 / (2π · I_c · cos φ).
///
/// Minimal at φ = 0 and divergent toward φ = ±π/2; within [`EPS_COS`] of the
/// divergence the operation errors instead of returning a huge value. For
/// bias points with cos φ < 0 the returned inductance is negative (inverted
/// slope of the current-phase relation).
pub fn josephson_inductance(p: &JunctionParams) -> Result<Inductance> {
    let c = p.phi.cos();
    if c.abs() < EPS_COS {
        return Err(Error::Divergence(format!(
            "junction inductance diverges at phase {} rad (|cos phi| = {:.3e} < {EPS_COS:.0e})",
            p.phi,
            c.abs()
        )));
    }
    Ok(Inductance::raw(FLUX_QUANTUM / (TAU * p.i_c * c)))
}
