//! Command implementations. Each takes already-resolved SI values, prints a
//! report to stdout, and maps failures onto the exit-code contract:
//! usage problems exit 2, domain/runtime problems exit 1.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use spakit_core::constants::PLANCK;
use spakit_core::cpw::{
    analyze, guided_wavelength, resonant_frequency, resonator_length, synthesize_gap, CpwGeometry,
    ResonatorMode,
};
use spakit_core::math::linear_from_db;
use spakit_core::nonlinear::{
    josephson_current, josephson_inductance, kinetic_inductance, JunctionParams,
    KineticInductanceParams,
};
use spakit_core::paramp::{
    cascade_noise_temperature, gain_bandwidth, haus_caves_min_added_noise, mixing_products,
    sql_noise_temperature, ChainStage, MixingProcess, MixingSpec,
};
use spakit_core::resonator::{
    bare_quarter_wave_frequency, coupling_phases, dip_metrics, sweep_response, CouplingLayout,
    QualityFactors, ResonanceModel, SweepPoint,
};
use spakit_core::{Current, Frequency, Impedance, Length};

use crate::report::{self, sig6};

/// Failures split by exit code: usage errors exit 2, runtime errors exit 1.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Runtime(String),
}

impl From<spakit_core::Error> for CliError {
    fn from(e: spakit_core::Error) -> Self {
        match e {
            spakit_core::Error::Argument(_) => CliError::Usage(e.to_string()),
            _ => CliError::Runtime(e.to_string()),
        }
    }
}

pub type CmdResult = Result<(), CliError>;

const Q_EXT_NOTE: &str = "note: the external Q is not derived from kappa/theta/psi here; \
supply q_ext from a first-order coupled-line model or a measurement.";

pub fn cpw_analyze(w: f64, s: f64, h: f64, eps_r: f64) -> CmdResult {
    let c = analyze(&CpwGeometry::new(w, s, h, eps_r)?)?;
    println!("k0       {}", sig6(c.k0));
    println!("k1       {}", sig6(c.k1));
    println!("eps_eff  {}", sig6(c.eps_eff));
    println!("z0       {} ohm", sig6(c.z0));
    println!("v_p      {} m/s", sig6(c.v_p));
    Ok(())
}

pub fn cpw_synth(w: f64, h: f64, eps_r: f64, z0_target: f64) -> CmdResult {
    let w_l = Length::new(w)?;
    let h_l = Length::new(h)?;
    let s = synthesize_gap(w_l, h_l, eps_r, Impedance::new(z0_target)?)?;
    let achieved = analyze(&CpwGeometry::new(w, s.meters(), h, eps_r)?)?;
    println!("s            {}", report::length(s.meters()));
    println!("achieved_z0  {} ohm", sig6(achieved.z0));
    Ok(())
}

pub fn resonator(
    mode: ResonatorMode,
    freq: Option<f64>,
    length: Option<f64>,
    eps_eff: f64,
) -> CmdResult {
    let (f, l) = match (freq, length) {
        (Some(f), None) => {
            let l = resonator_length(Frequency::new(f)?, eps_eff, mode)?;
            (f, l.meters())
        }
        (None, Some(l)) => {
            let f = resonant_frequency(Length::new(l)?, eps_eff, mode)?;
            (f.hz(), l)
        }
        _ => {
            return Err(CliError::Usage(
                "provide exactly one of --freq or --length".into(),
            ))
        }
    };
    let lam = guided_wavelength(Frequency::new(f)?, eps_eff)?;
    println!(
        "mode               {}",
        match mode {
            ResonatorMode::Quarter => "quarter",
            ResonatorMode::Half => "half",
        }
    );
    println!("eps_eff            {}", sig6(eps_eff));
    println!("frequency          {}", report::freq(f));
    println!("length             {}", report::length(l));
    println!("guided_wavelength  {}", report::length(lam.meters()));
    Ok(())
}

pub fn couple(l_open: f64, l_couple: f64, l_short: f64, eps_eff: f64, kappa: f64) -> CmdResult {
    let layout = CouplingLayout::new(l_open, l_couple, l_short, eps_eff, kappa)?;
    let f_r0 = bare_quarter_wave_frequency(&layout);
    let (theta, psi) = coupling_phases(&layout);
    println!("total_length  {}", report::length(layout.total_length()));
    println!("f_r0          {}", report::freq(f_r0.hz()));
    println!("theta         {} rad", sig6(theta));
    println!("psi           {} rad", sig6(psi));
    println!("kappa         {}", sig6(layout.kappa_c));
    println!("{Q_EXT_NOTE}");
    Ok(())
}

pub fn response(
    f_r: f64,
    q_int: f64,
    q_ext: f64,
    f_start: f64,
    f_stop: f64,
    points: usize,
    out: &Path,
) -> CmdResult {
    let model = ResonanceModel::new(Frequency::new(f_r)?, QualityFactors::new(q_int, q_ext)?);
    let sweep = sweep_response(
        &model,
        Frequency::new(f_start)?,
        Frequency::new(f_stop)?,
        points,
    )?;
    write_sweep_csv(out, &sweep)?;
    print_dip_summary(&sweep);
    println!("csv            {} ({} rows)", out.display(), sweep.len() + 1);
    Ok(())
}

/// Writes the sweep as `freq_hz,s_mag_db,s_phase_deg` with full double
/// precision and LF line endings.
pub fn write_sweep_csv(path: &Path, sweep: &[SweepPoint]) -> Result<(), CliError> {
    let file = File::create(path)
        .map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", path.display())))?;
    let mut w = BufWriter::new(file);
    let io_err = |e: std::io::Error| CliError::Runtime(format!("write failed: {e}"));
    writeln!(w, "freq_hz,s_mag_db,s_phase_deg").map_err(io_err)?;
    for p in sweep {
        let mag_db = 20.0 * p.s.norm().log10();
        let phase_deg = p.s.arg().to_degrees();
        writeln!(w, "{},{},{}", p.freq_hz, mag_db, phase_deg).map_err(io_err)?;
    }
    w.flush().map_err(io_err)
}

pub fn print_dip_summary(sweep: &[SweepPoint]) {
    let Some(m) = dip_metrics(sweep) else {
        println!("dip            no samples");
        return;
    };
    println!("dip_frequency  {}", report::freq(m.f_dip_hz));
    println!("dip_depth      {} dB", sig6(m.depth_db));
    match (m.fwhm_hz, m.q_loaded) {
        (Some(fwhm), Some(q)) => {
            println!("fwhm           {}", report::freq(fwhm));
            println!("q_loaded       {}", sig6(q));
        }
        _ => println!("fwhm           unresolved within this window (widen the sweep)"),
    }
}

pub fn amp_sql(f: f64) -> CmdResult {
    let t = sql_noise_temperature(Frequency::new(f)?);
    println!("f      {}", report::freq(f));
    println!("t_sql  {}", report::temperature(t.kelvin()));
    Ok(())
}

pub fn amp_gbw(gain_db: f64, kappa: f64) -> CmdResult {
    let g = linear_from_db(gain_db);
    let df = gain_bandwidth(g, Frequency::new(kappa)?)?;
    println!("gain       {} ({} dB)", sig6(g), sig6(gain_db));
    println!("kappa      {}", report::freq(kappa));
    println!("bandwidth  {}", report::freq(df.hz()));
    Ok(())
}

pub fn amp_haus_caves(gain_db: f64, f: f64) -> CmdResult {
    let g = linear_from_db(gain_db);
    let n = haus_caves_min_added_noise(g, Frequency::new(f)?)?;
    let photons = n / (PLANCK * f);
    println!("gain          {} ({} dB)", sig6(g), sig6(gain_db));
    println!("f             {}", report::freq(f));
    println!("n_add_min     {} J", sig6(n));
    println!("photon_equiv  {}", sig6(photons));
    println!("note: the bound approaches half a photon per unit gain for G >> 1.");
    Ok(())
}

pub fn amp_mix(f_pump: f64, f_signal: f64, process: MixingProcess) -> CmdResult {
    let spec = MixingSpec::new(f_pump, f_signal, process)?;
    let result = mixing_products(&spec)?;
    println!(
        "process     {}",
        match process {
            MixingProcess::ThreeWave => "3wm",
            MixingProcess::FourWave => "4wm",
        }
    );
    println!("pump        {}", report::freq(f_pump));
    println!("signal      {}", report::freq(f_signal));
    match result.idlers.as_slice() {
        [single] => println!("idler       {}", report::freq(single.hz())),
        idlers => {
            for (i, idler) in idlers.iter().enumerate() {
                println!("idler_{}     {}", i + 1, report::freq(idler.hz()));
            }
        }
    }
    println!("degenerate  {}", result.degenerate);
    Ok(())
}

pub fn chain(stages: &[ChainStage], f: Option<f64>) -> CmdResult {
    println!("stage  gain_db    noise_k    referred_k");
    let mut gain_product = 1.0;
    for (i, stage) in stages.iter().enumerate() {
        let referred = stage.noise_temp / gain_product;
        println!(
            "{:<5}  {:<9}  {:<9}  {}",
            i + 1,
            sig6(stage.gain_db),
            sig6(stage.noise_temp),
            sig6(referred)
        );
        gain_product *= linear_from_db(stage.gain_db);
    }
    let t_sys = cascade_noise_temperature(stages)?;
    println!("t_sys  {}", report::temperature(t_sys.kelvin()));
    if let Some(f) = f {
        let t_sql = sql_noise_temperature(Frequency::new(f)?);
        println!("t_sql({})  {}", report::freq(f), report::temperature(t_sql.kelvin()));
        println!("ratio_to_sql  {}", sig6(t_sys.kelvin() / t_sql.kelvin()));
    }
    Ok(())
}

pub fn nonlinear_lj(i_c: f64, phase: f64) -> CmdResult {
    let p = JunctionParams::new(i_c, phase)?;
    let l = josephson_inductance(&p)?;
    println!("i_c    {}", report::current(i_c));
    println!("phase  {} rad", sig6(phase));
    println!("l_j    {}", report::inductance(l.henries()));
    Ok(())
}

pub fn nonlinear_lk(l_k0: f64, i_star: f64, i: f64) -> CmdResult {
    let p = KineticInductanceParams::new(l_k0, i_star)?;
    let l = kinetic_inductance(&p, Current::new(i)?);
    println!("l_k0    {}", report::inductance(p.l_k0));
    println!("i_star  {}", report::current(p.i_star));
    println!("alpha   {} 1/A^2", sig6(p.alpha()));
    println!("i       {}", report::current(i));
    println!("l_k     {}", report::inductance(l.henries()));
    Ok(())
}

pub fn nonlinear_ic_current(i_c: f64, phase: f64) -> CmdResult {
    let p = JunctionParams::new(i_c, phase)?;
    let i = josephson_current(&p);
    println!("i_c    {}", report::current(i_c));
    println!("phase  {} rad", sig6(phase));
    println!("i      {}", report::current(i.amperes()));
    Ok(())
}
