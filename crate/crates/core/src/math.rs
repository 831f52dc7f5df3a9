//! Shared numeric utilities: the complete elliptic integral K(k) via the
//! arithmetic-geometric mean, and dB/linear power conversions.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Relative convergence target of the AGM iteration.
const AGM_REL_TOL: f64 = 1e-14;

/// Iteration cap. The AGM converges quadratically, so hitting the cap on a
/// valid modulus is a defect, not a runtime condition.
const AGM_MAX_ROUNDS: usize = 64;

/// Complete elliptic integral of the first kind K(k), modulus convention.
///
/// Computed as K(k) = π / (2·AGM(1, √(1−k²))), iterated to 1e-14 relative.
/// K is strictly increasing on [0, 1), with K(0) = π/2, and diverges as
/// k → 1. This is the exact oracle against which the logarithmic CPW
/// approximations in [`crate::cpw::k_ratio_approx`] are checked.
pub fn elliptic_k_agm(k: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&k) {
        return Err(Error::Domain(format!(
            "elliptic modulus must satisfy 0 <= k < 1, got {k}"
        )));
    }
    let mut a: f64 = 1.0;
    let mut b = (1.0 - k * k).sqrt();
    for _ in 0..AGM_MAX_ROUNDS {
        if (a - b).abs() <= AGM_REL_TOL * a {
            return Ok(PI / (a + b));
        }
        let next_a = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = next_a;
    }
    unreachable!("AGM did not converge for k = {k}; quadratic convergence holds on [0, 1)")
}

/// Power ratio to decibels, 10·log10(g).
pub fn db_from_linear(g: f64) -> Result<f64> {
    if !(g.is_finite() && g > 0.0) {
        return Err(Error::Domain(format!(
            "linear power ratio must be positive and finite, got {g}"
        )));
    }
    Ok(10.0 * g.log10())
}

/// Decibels to power ratio, 10^(db/10). Total on finite input.
pub fn linear_from_db(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}
