//! Quality-factor algebra, feedline coupling quantities of a side-coupled
//! quarter-wave resonator, and its dip response.
//!
//! The response model is the single ideal notch
//!
//! S(f) = 1 − (Q_L/Q_ext) / (1 + 2j·Q_L·(f − f_r)/f_r),
//!
//! which for a side-coupled resonator is conventionally a transmission dip:
//! its depth and linewidth encode the coupling strength and the loaded
//! quality factor. No Fano asymmetry or background mismatch is modeled.
//!
//! The external quality factor is always a user input here. The coupling
//! coefficient κ and the phases θ and ψ of the coupling region are computed
//! and reported so that a first-order coupled-line model can close the loop
//! on Q_ext externally; deriving Q_ext from κ is out of scope.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::constants::SPEED_OF_LIGHT;
use crate::error::{Error, Result};
use crate::quantities::Frequency;

/// Internal, external, and derived loaded quality factors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QualityFactors {
    /// Internal (intrinsic-loss) quality factor; may be +∞ for a lossless
    /// resonator.
    pub q_int: f64,
    /// External (coupling) quality factor, finite.
    pub q_ext: f64,
    /// Loaded quality factor, 1/q_loaded = 1/q_int + 1/q_ext.
    pub q_loaded: f64,
}

impl QualityFactors {
    pub fn new(q_int: f64, q_ext: f64) -> Result<Self> {
        if q_int.is_nan() || q_int <= 0.0 {
            return Err(Error::Domain(format!(
                "internal quality factor must be positive (or +inf), got {q_int}"
            )));
        }
        if !(q_ext.is_finite() && q_ext > 0.0) {
            return Err(Error::Domain(format!(
                "external quality factor must be positive and finite, got {q_ext}"
            )));
        }
        Ok(Self {
            q_int,
            q_ext,
            q_loaded: loaded_q(q_int, q_ext)?,
        })
    }
}

/// Harmonic combination 1/(1/q_int + 1/q_ext). Either argument may be +∞,
/// handled by limit.
pub fn loaded_q(q_int: f64, q_ext: f64) -> Result<f64> {
    for (name, q) in [("internal", q_int), ("external", q_ext)] {
        if q.is_nan() || q <= 0.0 {
            return Err(Error::Domain(format!(
                "{name} quality factor must be positive, got {q}"
            )));
        }
    }
    if q_int.is_infinite() {
        return Ok(q_ext);
    }
    if q_ext.is_infinite() {
        return Ok(q_int);
    }
    Ok(1.0 / (1.0 / q_int + 1.0 / q_ext))
}

/// Q = f0/Δf.
pub fn q_from_bandwidth(f0: Frequency, delta_f: Frequency) -> f64 {
    f0.hz() / delta_f.hz()
}

/// Δf = f0/Q, the inverse of [`q_from_bandwidth`].
pub fn bandwidth_from_q(f0: Frequency, q: f64) -> Result<Frequency> {
    if !(q.is_finite() && q > 0.0) {
        return Err(Error::Domain(format!(
            "quality factor must be positive and finite, got {q}"
        )));
    }
    Ok(Frequency::raw(f0.hz() / q))
}

/// Segment lengths of a side-coupled quarter-wave resonator plus the
/// dimensionless coupling coefficient of its feedline interaction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CouplingLayout {
    /// Open section length (m).
    pub l_open: f64,
    /// Coupling section length (m).
    pub l_couple: f64,
    /// Shorted section length (m).
    pub l_short: f64,
    /// Effective permittivity of the line.
    pub eps_eff: f64,
    /// Dimensionless coupling coefficient, 0 ≤ κ < 1. Set by the coupling
    /// gap and overlap; always supplied, never derived here.
    pub kappa_c: f64,
}

impl CouplingLayout {
    pub fn new(l_open: f64, l_couple: f64, l_short: f64, eps_eff: f64, kappa_c: f64) -> Result<Self> {
        for (name, v) in [
            ("open section", l_open),
            ("coupling section", l_couple),
            ("shorted section", l_short),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::Domain(format!(
                    "{name} length must be positive, got {v} m"
                )));
            }
        }
        if !(eps_eff.is_finite() && eps_eff >= 1.0) {
            return Err(Error::Domain(format!(
                "effective permittivity must be >= 1, got {eps_eff}"
            )));
        }
        if !(kappa_c.is_finite() && (0.0..1.0).contains(&kappa_c)) {
            return Err(Error::Domain(format!(
                "coupling coefficient must satisfy 0 <= kappa < 1, got {kappa_c}"
            )));
        }
        Ok(Self {
            l_open,
            l_couple,
            l_short,
            eps_eff,
            kappa_c,
        })
    }

    /// Total electrical length l_open + l_couple + l_short (m).
    pub fn total_length(&self) -> f64 {
        self.l_open + self.l_couple + self.l_short
    }

    /// Phase velocity on the line, c/√eps_eff (m/s).
    pub fn line_velocity(&self) -> f64 {
        SPEED_OF_LIGHT / self.eps_eff.sqrt()
    }
}

/// Bare quarter-wave resonance f_r0 = c_l / (4·(l_open + l_couple + l_short)).
pub fn bare_quarter_wave_frequency(layout: &CouplingLayout) -> Frequency {
    Frequency::raw(layout.line_velocity() / (4.0 * layout.total_length()))
}

/// Coupling-region phases (θ, ψ) at the bare resonance:
/// θ = 2π·f_r0·l_couple/c_l, ψ = 2π·f_r0·(l_couple + 2·l_open)/c_l,
/// so ψ − θ = 4π·f_r0·l_open/c_l.
pub fn coupling_phases(layout: &CouplingLayout) -> (f64, f64) {
    let f_r0 = bare_quarter_wave_frequency(layout).hz();
    let c_l = layout.line_velocity();
    let theta = TAU * f_r0 * layout.l_couple / c_l;
    let psi = TAU * f_r0 * (layout.l_couple + 2.0 * layout.l_open) / c_l;
    (theta, psi)
}

/// One resonance with its quality factors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResonanceModel {
    /// Resonance frequency (Hz).
    pub f_r: f64,
    /// Quality factors of the resonance.
    pub q: QualityFactors,
}

impl ResonanceModel {
    pub fn new(f_r: Frequency, q: QualityFactors) -> Self {
        Self { f_r: f_r.hz(), q }
    }
}

/// Complex transmission coefficient of the ideal notch at frequency `f`.
///
/// |S| dips to 1 − Q_L/Q_ext at resonance (0 for a lossless resonator) and
/// recovers to 1 far off resonance.
pub fn dip_response(model: &ResonanceModel, f: Frequency) -> Complex64 {
    let depth = model.q.q_loaded / model.q.q_ext;
    let detune = 2.0 * model.q.q_loaded * (f.hz() - model.f_r) / model.f_r;
    Complex64::new(1.0, 0.0) - Complex64::new(depth, 0.0) / Complex64::new(1.0, detune)
}

/// One sample of a frequency sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    /// Sample frequency (Hz).
    pub freq_hz: f64,
    /// Complex transmission coefficient at this frequency.
    pub s: Complex64,
}

/// Evaluates [`dip_response`] on a uniform grid of `points` frequencies from
/// `f_start` to `f_stop` inclusive, ordered by frequency.
pub fn sweep_response(
    model: &ResonanceModel,
    f_start: Frequency,
    f_stop: Frequency,
    points: usize,
) -> Result<Vec<SweepPoint>> {
    if f_start.hz() >= f_stop.hz() {
        return Err(Error::Argument(format!(
            "sweep window must satisfy f_start < f_stop, got [{}, {}] Hz",
            f_start.hz(),
            f_stop.hz()
        )));
    }
    if points < 2 {
        return Err(Error::Argument(format!(
            "a sweep needs at least 2 points, got {points}"
        )));
    }
    let (a, b) = (f_start.hz(), f_stop.hz());
    let last = (points - 1) as f64;
    Ok((0..points)
        .map(|i| {
            let f = a + (b - a) * i as f64 / last;
            SweepPoint {
                freq_hz: f,
                s: dip_response(model, Frequency::raw(f)),
            }
        })
        .collect())
}

/// Summary numbers extracted from a sweep: dip location, depth, and — when
/// both half-depth crossings lie inside the window — the full width at half
/// depth and the loaded Q recovered from it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DipMetrics {
    /// Grid frequency of the magnitude minimum (Hz).
    pub f_dip_hz: f64,
    /// 20·log10 |S| at the minimum (dB).
    pub depth_db: f64,
    /// Full width at half depth (Hz), interpolated in |S|².
    pub fwhm_hz: Option<f64>,
    /// Loaded Q recovered via [`q_from_bandwidth`] from the dip and width.
    pub q_loaded: Option<f64>,
}

/// Extracts [`DipMetrics`] from a sweep. Returns `None` for an empty sweep;
/// the width fields are `None` when the half-depth crossings fall outside
/// the window. Half depth is taken in power, halfway between the minimum
/// and the unit baseline, which for the ideal notch crosses exactly at the
/// loaded-linewidth detunings.
pub fn dip_metrics(sweep: &[SweepPoint]) -> Option<DipMetrics> {
    if sweep.is_empty() {
        return None;
    }
    let power: Vec<f64> = sweep.iter().map(|p| p.s.norm_sqr()).collect();
    let (i_min, _) = power
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.partial_cmp(b.1).expect("finite magnitudes"))?;
    let f_dip = sweep[i_min].freq_hz;
    let depth_db = 10.0 * power[i_min].log10();

    let threshold = 0.5 * (power[i_min] + 1.0);
    let crossing = |inside: usize, outside: usize| -> f64 {
        // linear interpolation in |S|^2 between adjacent samples
        let (p_in, p_out) = (power[inside], power[outside]);
        let t = (threshold - p_in) / (p_out - p_in);
        sweep[inside].freq_hz + t * (sweep[outside].freq_hz - sweep[inside].freq_hz)
    };
    let left = (0..i_min).rev().find(|&j| power[j] >= threshold);
    let right = (i_min + 1..sweep.len()).find(|&j| power[j] >= threshold);
    let fwhm = match (left, right) {
        (Some(l), Some(r)) => Some(crossing(r - 1, r) - crossing(l + 1, l)),
        _ => None,
    };
    Some(DipMetrics {
        f_dip_hz: f_dip,
        depth_db,
        fwhm_hz: fwhm,
        q_loaded: fwhm.map(|w| q_from_bandwidth(Frequency::raw(f_dip), Frequency::raw(w))),
    })
}
