//! Quantum amplifier figures of merit: standard-quantum-limit noise
//! temperature, the Haus-Caves added-noise bound, the gain-bandwidth
//! product, mixing-product frequencies, and a Friis noise budget for a
//! readout chain.
//!
//! The resonator linewidth entering [`gain_bandwidth`] is taken as an
//! ordinary frequency in Hz (the energy decay rate), not an angular rate.

use crate::constants::{BOLTZMANN, PLANCK, REDUCED_PLANCK};
use crate::error::{Error, Result};
use crate::math::linear_from_db;
use crate::quantities::{Frequency, Temperature};
use std::f64::consts::TAU;

/// Relative tolerance (to the pump frequency) within which a three-wave
/// signal at half the pump is flagged degenerate. The physical condition is
/// an exact equality; a strict float comparison would be untestable.
pub const DEGENERACY_REL_TOL: f64 = 1e-9;

/// Mixing-process order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MixingProcess {
    /// Second-order nonlinearity: one idler at f_pump − f_signal.
    ThreeWave,
    /// Third-order nonlinearity: idlers at 2·f_pump − f_signal and
    /// 2·f_signal − f_pump.
    FourWave,
}

/// Pump and signal tones applied to a nonlinear medium.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixingSpec {
    /// Pump frequency (Hz).
    pub f_pump: f64,
    /// Signal frequency (Hz).
    pub f_signal: f64,
    /// Process order.
    pub process: MixingProcess,
}

impl MixingSpec {
    pub fn new(f_pump: f64, f_signal: f64, process: MixingProcess) -> Result<Self> {
        for (name, f) in [("pump", f_pump), ("signal", f_signal)] {
            if !(f.is_finite() && f > 0.0) {
                return Err(Error::Domain(format!(
                    "{name} frequency must be positive, got {f} Hz"
                )));
            }
        }
        Ok(Self {
            f_pump,
            f_signal,
            process,
        })
    }
}

/// Idler tones produced by a mixing configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct MixingResult {
    /// One idler for three-wave mixing, two for four-wave mixing.
    pub idlers: Vec<Frequency>,
    /// True for a three-wave signal at half the pump (signal and idler
    /// coincide; phase-sensitive operation).
    pub degenerate: bool,
}

/// One stage of an amplification chain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChainStage {
    /// Power gain (dB); negative for attenuators.
    pub gain_db: f64,
    /// Equivalent input noise temperature (K).
    pub noise_temp: f64,
}

impl ChainStage {
    pub fn new(gain_db: f64, noise_temp: f64) -> Result<Self> {
        if !gain_db.is_finite() {
            return Err(Error::Domain(format!(
                "stage gain must be finite, got {gain_db} dB"
            )));
        }
        if !(noise_temp.is_finite() && noise_temp >= 0.0) {
            return Err(Error::Domain(format!(
                "stage noise temperature must be non-negative, got {noise_temp} K"
            )));
        }
        Ok(Self {
            gain_db,
            noise_temp,
        })
    }
}

/// Standard-quantum-limit noise temperature of phase-preserving
/// amplification, T = ħ·2πf / (2·k_B) = h·f/(2·k_B).
pub fn sql_noise_temperature(f: Frequency) -> Temperature {
    Temperature::raw(PLANCK * f.hz() / (2.0 * BOLTZMANN))
}

/// Haus-Caves bound on input-referred added noise for a phase-preserving
/// amplifier of linear power gain `g_linear`: (1/2)·ħ·2πf·(G − 1), in
/// joules. Zero at unity gain; equivalently (G−1)/2 photons at `f`.
pub fn haus_caves_min_added_noise(g_linear: f64, f: Frequency) -> Result<f64> {
    check_gain(g_linear)?;
    Ok(0.5 * REDUCED_PLANCK * TAU * f.hz() * (g_linear - 1.0))
}

/// Amplifier bandwidth from the gain-bandwidth product: Δf = κ/√G, so that
/// √G·Δf stays pinned to the resonator linewidth κ.
pub fn gain_bandwidth(g_linear: f64, kappa_linewidth: Frequency) -> Result<Frequency> {
    check_gain(g_linear)?;
    Ok(Frequency::raw(kappa_linewidth.hz() / g_linear.sqrt()))
}

fn check_gain(g_linear: f64) -> Result<()> {
    if !(g_linear.is_finite() && g_linear >= 1.0) {
        return Err(Error::Domain(format!(
            "linear power gain must be >= 1, got {g_linear}"
        )));
    }
    Ok(())
}

/// Idler frequencies of a mixing configuration.
///
/// Three-wave mixing yields f_pump − f_signal; four-wave mixing yields
/// 2·f_pump − f_signal and 2·f_signal − f_pump. A configuration whose idler
/// would be non-positive is rejected, naming the offending tone. The
/// degenerate flag fires only for three-wave signals within
/// [`DEGENERACY_REL_TOL`]·f_pump of half the pump.
pub fn mixing_products(spec: &MixingSpec) -> Result<MixingResult> {
    let (f_p, f_s) = (spec.f_pump, spec.f_signal);
    match spec.process {
        MixingProcess::ThreeWave => {
            let idler = f_p - f_s;
            if idler <= 0.0 {
                return Err(Error::Configuration(format!(
                    "three-wave idler f_pump - f_signal = {idler} Hz is not positive"
                )));
            }
            let degenerate = (f_s - 0.5 * f_p).abs() <= DEGENERACY_REL_TOL * f_p;
            Ok(MixingResult {
                idlers: vec![Frequency::raw(idler)],
                degenerate,
            })
        }
        MixingProcess::FourWave => {
            let idler_1 = 2.0 * f_p - f_s;
            let idler_2 = 2.0 * f_s - f_p;
            if idler_1 <= 0.0 {
                return Err(Error::Configuration(format!(
                    "four-wave idler 2*f_pump - f_signal = {idler_1} Hz is not positive"
                )));
            }
            if idler_2 <= 0.0 {
                return Err(Error::Configuration(format!(
                    "four-wave idler 2*f_signal - f_pump = {idler_2} Hz is not positive"
                )));
            }
            Ok(MixingResult {
                idlers: vec![Frequency::raw(idler_1), Frequency::raw(idler_2)],
                degenerate: false,
            })
        }
    }
}

/// Input-referred system noise temperature of a cascade,
/// T_sys = Σ T_i / Π_{j<i} G_j with the gains in linear units.
pub fn cascade_noise_temperature(stages: &[ChainStage]) -> Result<Temperature> {
    if stages.is_empty() {
        return Err(Error::Argument(
            "a noise cascade needs at least one stage".into(),
        ));
    }
    let mut total = 0.0;
    let mut gain_product = 1.0;
    for stage in stages {
        total += stage.noise_temp / gain_product;
        gain_product *= linear_from_db(stage.gain_db);
    }
    Ok(Temperature::raw(total))
}

/// Power gain as a plain ratio, G = p_out/p_in.
pub fn power_gain(p_out: f64, p_in: f64) -> Result<f64> {
    for (name, p) in [("output power", p_out), ("input power", p_in)] {
        if !(p.is_finite() && p > 0.0) {
            return Err(Error::Domain(format!("{name} must be positive, got {p}")));
        }
    }
    Ok(p_out / p_in)
}
