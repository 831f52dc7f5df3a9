//! Physical constants, CODATA 2018 (the 2019 SI redefinition makes c, h, e,
//! and k_B exact; hbar and Phi0 are derived from them at machine precision).

use std::f64::consts::TAU;

/// Speed of light in vacuum (m/s), exact.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Planck constant (J s), exact.
pub const PLANCK: f64 = 6.626_070_15e-34;

/// Reduced Planck constant h/(2π) (J s), ≈ 1.054571818e-34.
pub const REDUCED_PLANCK: f64 = PLANCK / TAU;

/// Boltzmann constant (J/K), exact.
pub const BOLTZMANN: f64 = 1.380_649e-23;

/// Elementary charge (C), exact.
pub const ELEMENTARY_CHARGE: f64 = 1.602_176_634e-19;

/// Magnetic flux quantum h/(2e) (Wb), ≈ 2.067833848e-15.
pub const FLUX_QUANTUM: f64 = PLANCK / (2.0 * ELEMENTARY_CHARGE);

/// The constants above bundled as one value, for callers that want to pass
/// them around or display them as a set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// Speed of light (m/s).
    pub c: f64,
    /// Planck constant (J s).
    pub h: f64,
    /// Reduced Planck constant (J s).
    pub hbar: f64,
    /// Boltzmann constant (J/K).
    pub k_b: f64,
    /// Elementary charge (C).
    pub e: f64,
    /// Magnetic flux quantum (Wb).
    pub phi0: f64,
}

/// CODATA 2018 values.
pub const CODATA_2018: PhysicalConstants = PhysicalConstants {
    c: SPEED_OF_LIGHT,
    h: PLANCK,
    hbar: REDUCED_PLANCK,
    k_b: BOLTZMANN,
    e: ELEMENTARY_CHARGE,
    phi0: FLUX_QUANTUM,
};
