//! Coplanar-waveguide analysis and synthesis by conformal mapping.
//!
//! The cross-section is a center conductor of width `w` flanked by gaps `s`
//! to semi-infinite ground planes on a substrate of thickness `h` and
//! relative permittivity `eps_r`. Metal thickness is taken as zero and the
//! dielectric as lossless; kinetic inductance of the film does not enter the
//! phase velocity.
//!
//! The elliptic-integral ratio K(k)/K(k') that governs both the effective
//! permittivity and the characteristic impedance is evaluated with the
//! two-branch logarithmic approximation conventional for CPW work
//! ([`k_ratio_approx`]); the exact AGM route in [`crate::math`] serves as its
//! oracle in the test suite.

use std::f64::consts::PI;

use crate::constants::SPEED_OF_LIGHT;
use crate::error::{Error, Result};
use crate::quantities::{Capacitance, Frequency, Impedance, Inductance, Length};

/// Branch boundary of the logarithmic K-ratio approximation.
pub const K_RATIO_BRANCH_POINT: f64 = 0.71;

/// Gap-synthesis search bracket: lower gap bound (m) and upper bound as a
/// multiple of the conductor width. Covers all practical CPW aspect ratios.
const GAP_MIN: f64 = 0.05e-6;
const GAP_MAX_WIDTHS: f64 = 50.0;

/// Gap synthesis stops when the achieved impedance is within this many ohms
/// of the target, or after the iteration cap.
const SYNTH_TOL_OHM: f64 = 1e-3;
const SYNTH_MAX_ITER: usize = 200;

/// CPW cross-section geometry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CpwGeometry {
    /// Center-conductor width (m).
    pub w: f64,
    /// Gap to the ground planes (m).
    pub s: f64,
    /// Substrate thickness (m).
    pub h: f64,
    /// Substrate relative permittivity.
    pub eps_r: f64,
}

impl CpwGeometry {
    pub fn new(w: f64, s: f64, h: f64, eps_r: f64) -> Result<Self> {
        for (name, v) in [("conductor width", w), ("gap", s), ("substrate thickness", h)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::Domain(format!("{name} must be positive, got {v} m")));
            }
        }
        if !(eps_r.is_finite() && eps_r >= 1.0) {
            return Err(Error::Domain(format!(
                "relative permittivity must be >= 1, got {eps_r}"
            )));
        }
        Ok(Self { w, s, h, eps_r })
    }
}

/// Derived line properties of a CPW cross-section.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CpwCharacteristics {
    /// Geometric modulus w/(w+2s).
    pub k0: f64,
    /// Substrate modulus sinh(πw/4h)/sinh(π(w+2s)/4h).
    pub k1: f64,
    /// Effective permittivity of the quasi-TEM mode.
    pub eps_eff: f64,
    /// Characteristic impedance (ohm).
    pub z0: f64,
    /// Phase velocity c/√eps_eff (m/s).
    pub v_p: f64,
}

/// Standing-wave boundary condition of a transmission-line resonator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResonatorMode {
    /// Both ends open: fundamental at v_p/(2l).
    Half,
    /// One end shorted to ground: fundamental at v_p/(4l).
    Quarter,
}

/// sinh(a)/sinh(b) for 0 < a < b, stable where sinh alone would overflow.
fn sinh_ratio(a: f64, b: f64) -> f64 {
    if b < 350.0 {
        a.sinh() / b.sinh()
    } else {
        (a - b).exp() * (1.0 - (-2.0 * a).exp()) / (1.0 - (-2.0 * b).exp())
    }
}

/// Normalized geometric ratios (k0, k1) of the cross-section.
pub fn moduli(g: &CpwGeometry) -> (f64, f64) {
    let k0 = g.w / (g.w + 2.0 * g.s);
    let quarter_h = 4.0 * g.h;
    let k1 = sinh_ratio(PI * g.w / quarter_h, PI * (g.w + 2.0 * g.s) / quarter_h);
    (k0, k1)
}

/// Elliptic-integral ratio K(k)/K(k'), k' = √(1−k²), by the two-branch
/// logarithmic approximation.
///
/// For k ≤ 0.71 the reciprocal-log form in k' applies; above, the log form
/// in k. Relative error against the AGM oracle stays below 1e-3 across
/// k ∈ [0.05, 0.95] (a few ppm in practice), and the branch seam at 0.71 is
/// continuous to the same level.
pub fn k_ratio_approx(k: f64) -> Result<f64> {
    if !(k > 0.0 && k < 1.0) {
        return Err(Error::Domain(format!(
            "modulus must satisfy 0 < k < 1, got {k}"
        )));
    }
    if k <= K_RATIO_BRANCH_POINT {
        let kp = (1.0 - k * k).sqrt();
        let root = kp.sqrt();
        Ok(PI / (2.0 * (1.0 + root) / (1.0 - root)).ln())
    } else {
        let root = k.sqrt();
        Ok((2.0 * (1.0 + root) / (1.0 - root)).ln() / PI)
    }
}

/// Effective permittivity, characteristic impedance, and phase velocity of a
/// CPW cross-section:
///
/// eps_eff = 1 + (eps_r − 1)/2 · [K(k1)/K(k1')]·[K(k0')/K(k0)],
/// z0 = 30π/√eps_eff · K(k0')/K(k0).
///
/// Errors only propagate from degenerate moduli (a modulus underflowing to 0
/// or reaching 1 for extreme aspect ratios).
pub fn analyze(g: &CpwGeometry) -> Result<CpwCharacteristics> {
    let (k0, k1) = moduli(g);
    let r0 = k_ratio_approx(k0)?;
    let r1 = k_ratio_approx(k1)?;
    let eps_eff = 1.0 + 0.5 * (g.eps_r - 1.0) * r1 / r0;
    let z0 = 30.0 * PI / (eps_eff.sqrt() * r0);
    Ok(CpwCharacteristics {
        k0,
        k1,
        eps_eff,
        z0,
        v_p: SPEED_OF_LIGHT / eps_eff.sqrt(),
    })
}

/// Finds the gap `s` for which the cross-section hits `z_target`, by
/// bisection on the monotone map s → z0 over s ∈ [0.05 µm, 50·w].
///
/// An out-of-bracket target returns [`Error::UnachievableImpedance`] carrying
/// the achievable interval.
pub fn synthesize_gap(w: Length, h: Length, eps_r: f64, z_target: Impedance) -> Result<Length> {
    let target = z_target.ohms();
    let s_min = GAP_MIN;
    let s_max = GAP_MAX_WIDTHS * w.meters();
    let z_at = |s: f64| -> Result<f64> {
        Ok(analyze(&CpwGeometry::new(w.meters(), s, h.meters(), eps_r)?)?.z0)
    };
    let z_lo = z_at(s_min)?;
    let z_hi = z_at(s_max)?;
    if !(z_lo..=z_hi).contains(&target) {
        return Err(Error::UnachievableImpedance {
            target,
            z_min: z_lo,
            z_max: z_hi,
        });
    }
    let (mut lo, mut hi) = (s_min, s_max);
    for _ in 0..SYNTH_MAX_ITER {
        let mid = 0.5 * (lo + hi);
        let z_mid = z_at(mid)?;
        if (z_mid - target).abs() <= SYNTH_TOL_OHM {
            return Length::new(mid);
        }
        if z_mid < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Length::new(0.5 * (lo + hi))
}

/// Guided wavelength λ = c / (f·√eps_eff).
pub fn guided_wavelength(f: Frequency, eps_eff: f64) -> Result<Length> {
    check_eps_eff(eps_eff)?;
    Ok(Length::raw(SPEED_OF_LIGHT / (f.hz() * eps_eff.sqrt())))
}

/// Fundamental resonance of a line of length `l`: v_p/(2l) for half-wave,
/// v_p/(4l) for quarter-wave boundary conditions.
pub fn resonant_frequency(l: Length, eps_eff: f64, mode: ResonatorMode) -> Result<Frequency> {
    check_eps_eff(eps_eff)?;
    let v_p = SPEED_OF_LIGHT / eps_eff.sqrt();
    let divisor = match mode {
        ResonatorMode::Half => 2.0,
        ResonatorMode::Quarter => 4.0,
    };
    Ok(Frequency::raw(v_p / (divisor * l.meters())))
}

/// Line length resonating at `f_target`: the inverse of
/// [`resonant_frequency`].
pub fn resonator_length(f_target: Frequency, eps_eff: f64, mode: ResonatorMode) -> Result<Length> {
    check_eps_eff(eps_eff)?;
    let v_p = SPEED_OF_LIGHT / eps_eff.sqrt();
    let divisor = match mode {
        ResonatorMode::Half => 2.0,
        ResonatorMode::Quarter => 4.0,
    };
    Ok(Length::raw(v_p / (divisor * f_target.hz())))
}

/// Lumped LC resonance 1/(2π√(LC)).
///
/// The inductance is re-checked for positivity because computed junction
/// inductances may carry a sign.
pub fn lc_resonance(l: Inductance, c_val: Capacitance) -> Result<Frequency> {
    if l.henries() <= 0.0 {
        return Err(Error::Domain(format!(
            "LC resonance needs a positive inductance, got {} H",
            l.henries()
        )));
    }
    Ok(Frequency::raw(
        1.0 / (2.0 * PI * (l.henries() * c_val.farads()).sqrt()),
    ))
}

fn check_eps_eff(eps_eff: f64) -> Result<()> {
    if !(eps_eff.is_finite() && eps_eff >= 1.0) {
        return Err(Error::Domain(format!(
            "effective permittivity must be >= 1, got {eps_eff}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::elliptic_k_agm;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn reference_geometry() -> CpwGeometry {
        // 50-ohm silicon design: w = 10 um, s = 6 um, h = 550 um, eps_r = 11.7
        CpwGeometry::new(10e-6, 6e-6, 550e-6, 11.7).unwrap()
    }

    /// Exact elliptic ratio K(k)/K(k') via the AGM oracle.
    fn k_ratio_exact(k: f64) -> f64 {
        let kp = (1.0 - k * k).sqrt();
        elliptic_k_agm(k).unwrap() / elliptic_k_agm(kp).unwrap()
    }

    #[test]
    fn moduli_reference_geometry() {
        let (k0, k1) = moduli(&reference_geometry());
        assert!((k0 - 10.0 / 22.0).abs() < 1e-15);
        // frozen direct evaluation of the sinh ratio (mpmath)
        assert!(((k1 - 0.45448613933165754) / k1).abs() < 1e-13);
        assert!(k1 < k0);
    }

    #[test]
    fn moduli_thick_substrate_limit() {
        let g = CpwGeometry::new(10e-6, 6e-6, 1e4 * 22e-6, 11.7).unwrap();
        let (k0, k1) = moduli(&g);
        assert!(((k1 - k0) / k0).abs() < 1e-6);
    }

    #[test]
    fn sinh_ratio_survives_extreme_arguments() {
        // direct sinh would overflow past ~710
        let r = sinh_ratio(500.0, 1000.0);
        assert!(r > 0.0 && r.is_finite());
        assert!((r.ln() + 500.0).abs() < 1e-9);
        // both forms agree where both are representable
        let direct = 100.0f64.sinh() / 340.0f64.sinh();
        let stable = (100.0f64 - 340.0).exp() * (1.0 - (-200.0f64).exp())
            / (1.0 - (-680.0f64).exp());
        assert!(((direct - stable) / direct).abs() < 1e-12);
        // continuity across the switch point
        let lo = sinh_ratio(100.0, 350.0 - 1e-9);
        let hi = sinh_ratio(100.0, 350.0 + 1e-9);
        assert!(((lo - hi) / lo).abs() < 1e-6);
    }

    #[test]
    fn k_ratio_self_dual_point_is_one() {
        let r = k_ratio_approx(std::f64::consts::FRAC_1_SQRT_2).unwrap();
        assert!((r - 1.0).abs() < 1e-4);
    }

    #[test]
    fn k_ratio_frozen_values() {
        // mpmath evaluations of the same logarithmic branches
        let r = k_ratio_approx(0.45455).unwrap();
        assert!(((r - 0.741_594_124_632_296_6) / r).abs() < 1e-13);
        let r9 = k_ratio_approx(0.9).unwrap();
        assert!(((r9 - 1.3782945710916043) / r9).abs() < 1e-13);
        // and against the AGM oracle route
        assert!(((r - k_ratio_exact(0.45455)) / r).abs() < 1e-3);
        assert!(((r9 - k_ratio_exact(0.9)) / r9).abs() < 1e-3);
    }

    #[test]
    fn k_ratio_rejects_out_of_domain() {
        assert!(k_ratio_approx(0.0).is_err());
        assert!(k_ratio_approx(1.0).is_err());
        assert!(k_ratio_approx(-0.5).is_err());
        assert!(k_ratio_approx(f64::NAN).is_err());
    }

    #[test]
    fn k_ratio_accuracy_grid_against_agm() {
        let mut max_rel = 0.0f64;
        for i in 0..50 {
            let k = 0.05 + (0.95 - 0.05) * i as f64 / 49.0;
            let approx = k_ratio_approx(k).unwrap();
            let exact = k_ratio_exact(k);
            max_rel = max_rel.max(((approx - exact) / exact).abs());
        }
        println!("k_ratio_approx max relative error on [0.05, 0.95]: {max_rel:.3e}");
        assert!(max_rel <= 1e-3);
    }

    #[test]
    fn k_ratio_branch_continuity() {
        let lo = k_ratio_approx(K_RATIO_BRANCH_POINT - 1e-9).unwrap();
        let hi = k_ratio_approx(K_RATIO_BRANCH_POINT + 1e-9).unwrap();
        let mid = k_ratio_approx(K_RATIO_BRANCH_POINT).unwrap();
        assert!(((lo - hi) / mid).abs() <= 1e-3);
    }

    #[test]
    fn analyze_reference_geometry() {
        let c = analyze(&reference_geometry()).unwrap();
        // frozen mpmath values for the logarithmic route
        assert!(((c.eps_eff - 6.349_629_352_601_144) / c.eps_eff).abs() < 1e-13);
        assert!(((c.z0 - 50.435_109_178_531_98) / c.z0).abs() < 1e-13);
        // design targets: ~50 ohm, eps_eff ~6.3
        assert!((c.z0 - 50.0).abs() < 1.0);
        assert!((c.eps_eff - 6.3).abs() < 0.1);
        assert!((c.v_p - SPEED_OF_LIGHT / c.eps_eff.sqrt()).abs() < 1.0);
    }

    #[test]
    fn analyze_vacuum_substrate() {
        let a = analyze(&CpwGeometry::new(10e-6, 6e-6, 550e-6, 1.0).unwrap()).unwrap();
        let b = analyze(&CpwGeometry::new(10e-6, 6e-6, 5e-3, 1.0).unwrap()).unwrap();
        assert!((a.eps_eff - 1.0).abs() < 1e-12);
        assert!((b.eps_eff - 1.0).abs() < 1e-12);
        assert!(((a.z0 - b.z0) / a.z0).abs() < 1e-12);
    }

    #[test]
    fn analyze_thick_substrate_limit() {
        let c = analyze(&CpwGeometry::new(10e-6, 6e-6, 1.0, 11.7).unwrap()).unwrap();
        let half_filled = (11.7 + 1.0) / 2.0;
        assert!(((c.eps_eff - half_filled) / half_filled).abs() < 5e-3);
    }

    #[test]
    fn analyze_eps_eff_bounds_hold() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let w = rng.random_range(1e-6..100e-6);
            let s = rng.random_range(0.5e-6..100e-6);
            let h = rng.random_range(50e-6..2e-3);
            let eps_r = rng.random_range(1.5..13.0);
            let c = analyze(&CpwGeometry::new(w, s, h, eps_r).unwrap()).unwrap();
            assert!(c.eps_eff > 1.0, "eps_eff {} at w={w} s={s} h={h}", c.eps_eff);
            assert!(
                c.eps_eff <= (eps_r + 1.0) / 2.0 + 1e-9,
                "eps_eff {} exceeds half-filled bound",
                c.eps_eff
            );
            assert!(c.k0 > 0.0 && c.k0 < 1.0);
            assert!(c.k1 > 0.0 && c.k1 < 1.0);
        }
    }

    #[test]
    fn z0_monotone_in_gap_and_width() {
        // z0 strictly increasing in s, strictly decreasing in w, on a 10x10 grid
        let ws: Vec<f64> = (1..=10).map(|i| i as f64 * 4e-6).collect();
        let ss: Vec<f64> = (1..=10).map(|i| i as f64 * 3e-6).collect();
        for &w in &ws {
            for pair in ss.windows(2) {
                let z_a = analyze(&CpwGeometry::new(w, pair[0], 550e-6, 11.7).unwrap())
                    .unwrap()
                    .z0;
                let z_b = analyze(&CpwGeometry::new(w, pair[1], 550e-6, 11.7).unwrap())
                    .unwrap()
                    .z0;
                assert!(z_b > z_a, "z0 not increasing in s at w={w}");
            }
        }
        for &s in &ss {
            for pair in ws.windows(2) {
                let z_a = analyze(&CpwGeometry::new(pair[0], s, 550e-6, 11.7).unwrap())
                    .unwrap()
                    .z0;
                let z_b = analyze(&CpwGeometry::new(pair[1], s, 550e-6, 11.7).unwrap())
                    .unwrap()
                    .z0;
                assert!(z_b < z_a, "z0 not decreasing in w at s={s}");
            }
        }
    }

    #[test]
    fn synthesize_gap_reference_target() {
        let s = synthesize_gap(
            Length::new(10e-6).unwrap(),
            Length::new(550e-6).unwrap(),
            11.7,
            Impedance::new(50.0).unwrap(),
        )
        .unwrap()
        .meters();
        // mpmath bisection gives 5.8231 um; the design gap is 6 um
        assert!(((s - 5.823_104_226_102_124e-6) / s).abs() < 1e-4);
        assert!((s - 6e-6).abs() / 6e-6 < 0.10);
    }

    #[test]
    fn synthesize_gap_round_trip() {
        let s = synthesize_gap(
            Length::new(10e-6).unwrap(),
            Length::new(550e-6).unwrap(),
            11.7,
            Impedance::new(50.0).unwrap(),
        )
        .unwrap();
        let z = analyze(&CpwGeometry::new(10e-6, s.meters(), 550e-6, 11.7).unwrap())
            .unwrap()
            .z0;
        assert!((z - 50.0).abs() <= 1e-3);
    }

    #[test]
    fn synthesize_gap_unachievable_target() {
        // brute-force scan: z0 over the gap bracket never gets near 1 ohm
        let mut scan_min = f64::INFINITY;
        for i in 0..500 {
            let s = GAP_MIN + (50.0 * 10e-6 - GAP_MIN) * i as f64 / 499.0;
            let z = analyze(&CpwGeometry::new(10e-6, s, 550e-6, 11.7).unwrap())
                .unwrap()
                .z0;
            scan_min = scan_min.min(z);
        }
        assert!(scan_min > 10.0, "scan minimum {scan_min} unexpectedly low");

        let err = synthesize_gap(
            Length::new(10e-6).unwrap(),
            Length::new(550e-6).unwrap(),
            11.7,
            Impedance::new(1.0).unwrap(),
        )
        .unwrap_err();
        match err {
            Error::UnachievableImpedance { target, z_min, z_max } => {
                assert_eq!(target, 1.0);
                assert!(z_min > target && z_max > z_min);
                assert!((z_min - scan_min).abs() / scan_min < 0.05);
            }
            other => panic!("expected UnachievableImpedance, got {other:?}"),
        }
    }

    #[test]
    fn synthesize_gap_randomized_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..20 {
            let w = rng.random_range(2e-6..50e-6);
            let h = rng.random_range(100e-6..700e-6);
            let eps_r = rng.random_range(2.0..12.0);
            let wl = Length::new(w).unwrap();
            let hl = Length::new(h).unwrap();
            let z_lo = analyze(&CpwGeometry::new(w, GAP_MIN, h, eps_r).unwrap())
                .unwrap()
                .z0;
            let z_hi = analyze(&CpwGeometry::new(w, GAP_MAX_WIDTHS * w, h, eps_r).unwrap())
                .unwrap()
                .z0;
            let target = z_lo + rng.random_range(0.05..0.95) * (z_hi - z_lo);
            let s = synthesize_gap(wl, hl, eps_r, Impedance::new(target).unwrap()).unwrap();
            let z = analyze(&CpwGeometry::new(w, s.meters(), h, eps_r).unwrap())
                .unwrap()
                .z0;
            assert!(
                (z - target).abs() <= 1e-3,
                "round trip missed: target {target}, got {z}"
            );
        }
    }

    #[test]
    fn guided_wavelength_reference_points() {
        let f = Frequency::new(6e9).unwrap();
        let lam = guided_wavelength(f, 6.3).unwrap().meters();
        // frozen: c/(6e9 * sqrt(6.3)) with CODATA c
        assert!(((lam - 0.01990669570357109) / lam).abs() < 1e-13);
        // vacuum limit: free-space wavelength
        let lam0 = guided_wavelength(f, 1.0).unwrap().meters();
        assert!(((lam0 - SPEED_OF_LIGHT / 6e9) / lam0).abs() < 1e-15);
        // doubling f halves the wavelength
        let lam2 = guided_wavelength(Frequency::new(12e9).unwrap(), 6.3)
            .unwrap()
            .meters();
        assert!(((lam - 2.0 * lam2) / lam).abs() < 1e-14);
        assert!(guided_wavelength(f, 0.5).is_err());
    }

    #[test]
    fn resonant_frequency_reference_points() {
        let l = Length::new(5.43e-3).unwrap();
        let f = resonant_frequency(l, 6.3, ResonatorMode::Quarter)
            .unwrap()
            .hz();
        // frozen: 5.4990872109e9; design target 5.5 GHz within 1%
        assert!(((f - 5_499_087_210.931_24) / f).abs() < 1e-13);
        assert!((f - 5.5e9).abs() / 5.5e9 < 0.01);

        let f_half = resonant_frequency(l, 6.3, ResonatorMode::Half).unwrap().hz();
        assert!(((f_half - 2.0 * f) / f_half).abs() < 1e-15);

        let f_double = resonant_frequency(Length::new(2.0 * 5.43e-3).unwrap(), 6.3, ResonatorMode::Quarter)
            .unwrap()
            .hz();
        assert!(((f_double - f / 2.0) / f_double).abs() < 1e-15);
    }

    #[test]
    fn resonator_length_reference_points() {
        let f = Frequency::new(5.5e9).unwrap();
        let l = resonator_length(f, 6.3, ResonatorMode::Quarter).unwrap().meters();
        // frozen: 5.4290988282e-3; design target 5.43 mm within 1%
        assert!(((l - 5.429_098_828_246_661e-3) / l).abs() < 1e-13);
        assert!((l - 5.43e-3).abs() / 5.43e-3 < 0.01);

        let l_half = resonator_length(f, 6.3, ResonatorMode::Half).unwrap().meters();
        assert!(((l_half - 2.0 * l) / l_half).abs() < 1e-15);
    }

    #[test]
    fn frequency_length_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let f = rng.random_range(1e9..12e9);
            let eps = rng.random_range(1.0..12.0);
            for mode in [ResonatorMode::Half, ResonatorMode::Quarter] {
                let l = resonator_length(Frequency::new(f).unwrap(), eps, mode).unwrap();
                let back = resonant_frequency(l, eps, mode).unwrap().hz();
                assert!(((back - f) / f).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn lc_resonance_reference_points() {
        let f = lc_resonance(
            Inductance::new(1e-9).unwrap(),
            Capacitance::new(1e-12).unwrap(),
        )
        .unwrap()
        .hz();
        // frozen: 5.0329212104e9
        assert!(((f - 5_032_921_210.448_704) / f).abs() < 1e-13);

        // quadrupling L halves f0
        let f4 = lc_resonance(
            Inductance::new(4e-9).unwrap(),
            Capacitance::new(1e-12).unwrap(),
        )
        .unwrap()
        .hz();
        assert!(((f4 - f / 2.0) / f4).abs() < 1e-14);

        // symmetric under swapping the numeric values of L and C
        let swapped = lc_resonance(
            Inductance::new(1e-12).unwrap(),
            Capacitance::new(1e-9).unwrap(),
        )
        .unwrap()
        .hz();
        assert!(((swapped - f) / f).abs() < 1e-14);
    }

    #[test]
    fn geometry_rejects_bad_input() {
        assert!(CpwGeometry::new(0.0, 6e-6, 550e-6, 11.7).is_err());
        assert!(CpwGeometry::new(10e-6, -1e-6, 550e-6, 11.7).is_err());
        assert!(CpwGeometry::new(10e-6, 6e-6, 0.0, 11.7).is_err());
        assert!(CpwGeometry::new(10e-6, 6e-6, 550e-6, 0.5).is_err());
    }
}
