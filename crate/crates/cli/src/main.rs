//! `spakit` — design calculations for superconducting CPW resonators and
//! parametric amplifiers from the command line.
//!
//! Exit codes: 0 success, 1 domain/runtime error, 2 usage error.

mod commands;
mod config;
mod report;
mod stages;
mod units;
mod walkthrough;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use spakit_core::cpw::{analyze, CpwGeometry, ResonatorMode};
use spakit_core::paramp::MixingProcess;

use commands::{CliError, CmdResult};
use config::Config;

#[derive(Parser)]
#[command(
    name = "spakit",
    version,
    about = "Superconducting CPW resonator and parametric amplifier design calculations",
    after_help = "Values accept unit suffixes (10um, 5.5GHz, 150mK, 50ohm, 20dB); \
unsuffixed numbers are SI base units. A key/value config file (--config) supplies \
defaults for omitted flags; flags override config."
)]
struct Cli {
    /// Key/value config file supplying defaults for omitted flags.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Coplanar-waveguide line analysis and gap synthesis.
    Cpw {
        #[command(subcommand)]
        cmd: CpwCommand,
    },
    /// Transmission-line resonator frequency/length relations.
    Resonator(ResonatorArgs),
    /// Feedline coupling quantities of a side-coupled quarter-wave resonator.
    Couple(CoupleArgs),
    /// Dip-response frequency sweep: CSV output plus a summary report.
    Response(ResponseArgs),
    /// Amplifier figures of merit.
    Amp {
        #[command(subcommand)]
        cmd: AmpCommand,
    },
    /// Input-referred noise budget of a staged amplification chain.
    Chain(ChainArgs),
    /// Nonlinear inductance elements.
    Nonlinear {
        #[command(subcommand)]
        cmd: NonlinearCommand,
    },
    /// Multi-step design sequences.
    Design {
        #[command(subcommand)]
        cmd: DesignCommand,
    },
}

#[derive(Subcommand)]
enum CpwCommand {
    /// Compute k0, k1, eps_eff, z0, and v_p for a cross-section.
    Analyze(GeometryArgs),
    /// Find the gap that hits a target impedance.
    Synth(SynthArgs),
}

#[derive(Args)]
struct GeometryArgs {
    /// Center-conductor width (e.g. 10um).
    #[arg(long, value_parser = units::parse_length)]
    w: Option<f64>,
    /// Gap to the ground planes.
    #[arg(long, value_parser = units::parse_length)]
    s: Option<f64>,
    /// Substrate thickness.
    #[arg(long, value_parser = units::parse_length)]
    h: Option<f64>,
    /// Substrate relative permittivity.
    #[arg(long, value_parser = units::parse_bare)]
    er: Option<f64>,
}

#[derive(Args)]
struct SynthArgs {
    /// Center-conductor width.
    #[arg(long, value_parser = units::parse_length)]
    w: Option<f64>,
    /// Substrate thickness.
    #[arg(long, value_parser = units::parse_length)]
    h: Option<f64>,
    /// Substrate relative permittivity.
    #[arg(long, value_parser = units::parse_bare)]
    er: Option<f64>,
    /// Target characteristic impedance (e.g. 50 or 50ohm).
    #[arg(long, value_parser = units::parse_impedance)]
    z0: f64,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Quarter,
    Half,
}

impl From<ModeArg> for ResonatorMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Quarter => ResonatorMode::Quarter,
            ModeArg::Half => ResonatorMode::Half,
        }
    }
}

#[derive(Args)]
struct ResonatorArgs {
    /// Standing-wave boundary condition.
    #[arg(long, value_enum)]
    mode: ModeArg,
    /// Resonance frequency; exactly one of --freq/--length.
    #[arg(long, value_parser = units::parse_frequency)]
    freq: Option<f64>,
    /// Resonator length; exactly one of --freq/--length.
    #[arg(long, value_parser = units::parse_length)]
    length: Option<f64>,
    /// Effective permittivity; alternatively give the geometry flags.
    #[arg(long = "eps-eff", value_parser = units::parse_bare)]
    eps_eff: Option<f64>,
    #[command(flatten)]
    geometry: GeometryArgs,
}

#[derive(Args)]
struct CoupleArgs {
    /// Open section length.
    #[arg(long = "l-open", value_parser = units::parse_length)]
    l_open: Option<f64>,
    /// Coupling section length.
    #[arg(long = "l-couple", value_parser = units::parse_length)]
    l_couple: Option<f64>,
    /// Shorted section length.
    #[arg(long = "l-short", value_parser = units::parse_length)]
    l_short: Option<f64>,
    /// Effective permittivity of the line.
    #[arg(long = "eps-eff", value_parser = units::parse_bare)]
    eps_eff: Option<f64>,
    /// Dimensionless coupling coefficient, 0 <= kappa < 1.
    #[arg(long, value_parser = units::parse_bare)]
    kappa: Option<f64>,
}

#[derive(Args)]
struct ResponseArgs {
    /// Resonance frequency.
    #[arg(long = "f-r", value_parser = units::parse_frequency)]
    f_r: Option<f64>,
    /// Internal quality factor (inf for lossless).
    #[arg(long = "q-int", value_parser = units::parse_bare)]
    q_int: Option<f64>,
    /// External quality factor.
    #[arg(long = "q-ext", value_parser = units::parse_bare)]
    q_ext: Option<f64>,
    /// Sweep start frequency.
    #[arg(long = "f-start", value_parser = units::parse_frequency)]
    f_start: Option<f64>,
    /// Sweep stop frequency.
    #[arg(long = "f-stop", value_parser = units::parse_frequency)]
    f_stop: Option<f64>,
    /// Number of grid points (>= 2).
    #[arg(long)]
    points: Option<usize>,
    /// Output CSV path.
    #[arg(long, value_name = "PATH")]
    out: PathBuf,
}

#[derive(Subcommand)]
enum AmpCommand {
    /// Standard-quantum-limit noise temperature at a signal frequency.
    Sql {
        #[arg(long, value_parser = units::parse_frequency)]
        f: f64,
    },
    /// Bandwidth from the gain-bandwidth product.
    Gbw {
        /// Power gain in dB.
        #[arg(long = "gain-db", value_parser = units::parse_db, allow_hyphen_values = true)]
        gain_db: f64,
        /// Resonator linewidth (energy decay rate, in Hz).
        #[arg(long, value_parser = units::parse_frequency)]
        kappa: f64,
    },
    /// Haus-Caves minimum added noise for a given gain.
    HausCaves {
        /// Power gain in dB.
        #[arg(long = "gain-db", value_parser = units::parse_db, allow_hyphen_values = true)]
        gain_db: f64,
        #[arg(long, value_parser = units::parse_frequency)]
        f: f64,
    },
    /// Idler frequencies and degeneracy of a mixing configuration.
    Mix {
        #[arg(long, value_parser = units::parse_frequency)]
        pump: f64,
        #[arg(long, value_parser = units::parse_frequency)]
        signal: f64,
        #[arg(long, value_enum)]
        process: ProcessArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ProcessArg {
    /// Three-wave mixing (second-order nonlinearity).
    #[value(name = "3wm")]
    ThreeWave,
    /// Four-wave mixing (third-order nonlinearity).
    #[value(name = "4wm")]
    FourWave,
}

impl From<ProcessArg> for MixingProcess {
    fn from(p: ProcessArg) -> Self {
        match p {
            ProcessArg::ThreeWave => MixingProcess::ThreeWave,
            ProcessArg::FourWave => MixingProcess::FourWave,
        }
    }
}

#[derive(Args)]
struct ChainArgs {
    /// Stage file: one `gain_db, noise_temp` per line, `#` comments.
    #[arg(long, value_name = "PATH")]
    stages: PathBuf,
    /// Reference frequency for a standard-quantum-limit comparison.
    #[arg(long, value_parser = units::parse_frequency)]
    f: Option<f64>,
}

#[derive(Subcommand)]
enum NonlinearCommand {
    /// Josephson inductance at a bias phase.
    Lj {
        /// Critical current (e.g. 1uA).
        #[arg(long, value_parser = units::parse_current)]
        ic: f64,
        /// Junction phase (rad, signed).
        #[arg(long, value_parser = units::parse_bare, allow_hyphen_values = true)]
        phase: f64,
    },
    /// Kinetic inductance at a bias current.
    Lk {
        /// Zero-bias kinetic inductance (e.g. 1nH).
        #[arg(long, value_parser = units::parse_inductance)]
        lk0: f64,
        /// Characteristic current scale.
        #[arg(long, value_parser = units::parse_current)]
        istar: f64,
        /// Bias current (signed).
        #[arg(long, value_parser = units::parse_current, allow_hyphen_values = true)]
        i: f64,
    },
    /// Junction supercurrent I_c sin(phase).
    IcCurrent {
        #[arg(long, value_parser = units::parse_current)]
        ic: f64,
        #[arg(long, value_parser = units::parse_bare, allow_hyphen_values = true)]
        phase: f64,
    },
}

#[derive(Subcommand)]
enum DesignCommand {
    /// Run the full reference design sequence: analyze, synthesis check,
    /// resonator sizing, coupling, and dip response.
    Walkthrough(WalkthroughArgs),
}

#[derive(Args)]
struct WalkthroughArgs {
    #[command(flatten)]
    geometry: GeometryArgs,
    /// Target resonance frequency.
    #[arg(long = "f-target", value_parser = units::parse_frequency)]
    f_target: Option<f64>,
    /// Target line impedance for the synthesis check.
    #[arg(long = "z0-target", value_parser = units::parse_impedance)]
    z0_target: Option<f64>,
    /// Open section length of the coupling region.
    #[arg(long = "l-open", value_parser = units::parse_length)]
    l_open: Option<f64>,
    /// Coupling section length.
    #[arg(long = "l-couple", value_parser = units::parse_length)]
    l_couple: Option<f64>,
    /// Coupling coefficient to echo.
    #[arg(long, value_parser = units::parse_bare)]
    kappa: Option<f64>,
    /// Internal quality factor.
    #[arg(long = "q-int", value_parser = units::parse_bare)]
    q_int: Option<f64>,
    /// External quality factor.
    #[arg(long = "q-ext", value_parser = units::parse_bare)]
    q_ext: Option<f64>,
    /// Sweep span around the bare resonance.
    #[arg(long, value_parser = units::parse_frequency)]
    span: Option<f64>,
    /// Sweep points.
    #[arg(long)]
    points: Option<usize>,
    /// Optional CSV path for the response sweep.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> CmdResult {
    let cfg = match &cli.config {
        Some(path) => Config::load(path).map_err(CliError::Runtime)?,
        None => Config::empty(),
    };
    match cli.command {
        Command::Cpw { cmd } => match cmd {
            CpwCommand::Analyze(args) => {
                let (w, s, h, er) = resolve_geometry(&args, &cfg)?;
                commands::cpw_analyze(w, s, h, er)
            }
            CpwCommand::Synth(args) => commands::cpw_synth(
                resolve(args.w, &cfg, "w", "--w")?,
                resolve(args.h, &cfg, "h", "--h")?,
                resolve(args.er, &cfg, "eps_r", "--er")?,
                args.z0,
            ),
        },
        Command::Resonator(args) => {
            let eps_eff = resolve_eps_eff(args.eps_eff, &args.geometry, &cfg)?;
            commands::resonator(args.mode.into(), args.freq, args.length, eps_eff)
        }
        Command::Couple(args) => commands::couple(
            resolve(args.l_open, &cfg, "l_open", "--l-open")?,
            resolve(args.l_couple, &cfg, "l_couple", "--l-couple")?,
            resolve(args.l_short, &cfg, "l_short", "--l-short")?,
            resolve(args.eps_eff, &cfg, "eps_eff", "--eps-eff")?,
            resolve(args.kappa, &cfg, "kappa", "--kappa")?,
        ),
        Command::Response(args) => commands::response(
            resolve(args.f_r, &cfg, "f_r", "--f-r")?,
            resolve(args.q_int, &cfg, "q_int", "--q-int")?,
            resolve(args.q_ext, &cfg, "q_ext", "--q-ext")?,
            resolve(args.f_start, &cfg, "f_start", "--f-start")?,
            resolve(args.f_stop, &cfg, "f_stop", "--f-stop")?,
            args.points
                .or_else(|| cfg.points())
                .ok_or_else(|| CliError::Usage("missing --points (no 'points' in config)".into()))?,
            &args.out,
        ),
        Command::Amp { cmd } => match cmd {
            AmpCommand::Sql { f } => commands::amp_sql(f),
            AmpCommand::Gbw { gain_db, kappa } => commands::amp_gbw(gain_db, kappa),
            AmpCommand::HausCaves { gain_db, f } => commands::amp_haus_caves(gain_db, f),
            AmpCommand::Mix {
                pump,
                signal,
                process,
            } => commands::amp_mix(pump, signal, process.into()),
        },
        Command::Chain(args) => {
            let stages = stages::load_stages(&args.stages).map_err(CliError::Runtime)?;
            commands::chain(&stages, args.f)
        }
        Command::Nonlinear { cmd } => match cmd {
            NonlinearCommand::Lj { ic, phase } => commands::nonlinear_lj(ic, phase),
            NonlinearCommand::Lk { lk0, istar, i } => commands::nonlinear_lk(lk0, istar, i),
            NonlinearCommand::IcCurrent { ic, phase } => commands::nonlinear_ic_current(ic, phase),
        },
        Command::Design { cmd } => match cmd {
            DesignCommand::Walkthrough(args) => {
                let inputs = resolve_walkthrough(&args, &cfg)?;
                walkthrough::run(&inputs)
            }
        },
    }
}

/// Flag value, else config value, else a usage error naming both spellings.
fn resolve(flag: Option<f64>, cfg: &Config, key: &str, flag_name: &str) -> Result<f64, CliError> {
    flag.or_else(|| cfg.get(key)).ok_or_else(|| {
        CliError::Usage(format!("missing {flag_name} (no '{key}' in config)"))
    })
}

fn resolve_geometry(args: &GeometryArgs, cfg: &Config) -> Result<(f64, f64, f64, f64), CliError> {
    Ok((
        resolve(args.w, cfg, "w", "--w")?,
        resolve(args.s, cfg, "s", "--s")?,
        resolve(args.h, cfg, "h", "--h")?,
        resolve(args.er, cfg, "eps_r", "--er")?,
    ))
}

/// Effective-permittivity precedence: explicit --eps-eff, then geometry
/// flags (analyzed), then config `eps_eff`, then config geometry.
fn resolve_eps_eff(
    eps_eff: Option<f64>,
    geometry: &GeometryArgs,
    cfg: &Config,
) -> Result<f64, CliError> {
    if let Some(e) = eps_eff {
        return Ok(e);
    }
    let analyze_for_eps = |geometry: &GeometryArgs| -> Result<f64, CliError> {
        let (w, s, h, er) = resolve_geometry(geometry, cfg)?;
        Ok(analyze(&CpwGeometry::new(w, s, h, er)?)?.eps_eff)
    };
    let has_geometry_flags = geometry.w.is_some()
        || geometry.s.is_some()
        || geometry.h.is_some()
        || geometry.er.is_some();
    if has_geometry_flags {
        return analyze_for_eps(geometry);
    }
    if let Some(e) = cfg.get("eps_eff") {
        return Ok(e);
    }
    if cfg.get("w").is_some() {
        return analyze_for_eps(geometry);
    }
    Err(CliError::Usage(
        "missing --eps-eff (or give the full geometry: --w --s --h --er)".into(),
    ))
}

fn resolve_walkthrough(
    args: &WalkthroughArgs,
    cfg: &Config,
) -> Result<walkthrough::WalkthroughInputs, CliError> {
    use walkthrough::Defaults;
    let or_default = |flag: Option<f64>, key: &str, default: f64| -> f64 {
        flag.or_else(|| cfg.get(key)).unwrap_or(default)
    };
    Ok(walkthrough::WalkthroughInputs {
        w: or_default(args.geometry.w, "w", Defaults::W),
        s: or_default(args.geometry.s, "s", Defaults::S),
        h: or_default(args.geometry.h, "h", Defaults::H),
        eps_r: or_default(args.geometry.er, "eps_r", Defaults::EPS_R),
        f_target: args.f_target.unwrap_or(Defaults::F_TARGET),
        z0_target: args.z0_target.unwrap_or(Defaults::Z0_TARGET),
        l_open: or_default(args.l_open, "l_open", Defaults::L_OPEN),
        l_couple: or_default(args.l_couple, "l_couple", Defaults::L_COUPLE),
        kappa: or_default(args.kappa, "kappa", Defaults::KAPPA),
        q_int: or_default(args.q_int, "q_int", Defaults::Q_INT),
        q_ext: or_default(args.q_ext, "q_ext", Defaults::Q_EXT),
        span: args.span.unwrap_or(Defaults::SPAN),
        points: args.points.or_else(|| cfg.points()).unwrap_or(Defaults::POINTS),
        out: args.out.clone(),
    })
}
