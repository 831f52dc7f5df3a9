//! Acceptance criterion 12: CLI determinism, the walkthrough table, CSV
//! round-trip fidelity, and the exit-code contract across all commands.

use std::io::Write;
use std::process::{Command, Output};

use spakit_core::resonator::{dip_response, QualityFactors, ResonanceModel};
use spakit_core::Frequency;

fn spakit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spakit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn unit_factor(unit: &str) -> f64 {
    match unit {
        "GHz" => 1e9,
        "MHz" => 1e6,
        "kHz" => 1e3,
        "Hz" => 1.0,
        "m" => 1.0,
        "mm" => 1e-3,
        "um" => 1e-6,
        "ohm" | "rad" => 1.0,
        other => panic!("unexpected unit '{other}'"),
    }
}

/// Parses `key value [unit]` from the first matching trimmed line.
fn value_of(text: &str, key: &str) -> f64 {
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| l.starts_with(key) && l[key.len()..].starts_with(char::is_whitespace))
        .unwrap_or_else(|| panic!("no '{key}' line in:\n{text}"));
    let mut tokens = line.split_whitespace().skip(1);
    let value: f64 = tokens.next().unwrap().parse().unwrap();
    match tokens.next() {
        Some(u) if !u.starts_with('(') => value * unit_factor(u),
        _ => value,
    }
}

#[test]
fn criterion_12_walkthrough_table() {
    let first = spakit(&["design", "walkthrough"]);
    assert_eq!(code(&first), 0);
    let second = spakit(&["design", "walkthrough"]);
    assert_eq!(first.stdout, second.stdout, "walkthrough is not deterministic");

    let text = String::from_utf8(first.stdout).unwrap();
    let summary = text.split("summary").nth(1).expect("summary block");

    // criterion 1 windows
    let z0 = value_of(summary, "z0");
    assert!((z0 - 50.0).abs() <= 1.0, "z0 {z0}");
    let eps_eff = value_of(summary, "eps_eff");
    assert!((eps_eff - 6.3).abs() <= 0.1, "eps_eff {eps_eff}");

    // criterion 2 window
    let length = value_of(summary, "length");
    assert!((length - 5.43e-3).abs() / 5.43e-3 <= 0.01, "length {length}");

    // criterion 9 window
    let f_r0 = value_of(summary, "f_r0");
    assert!((f_r0 - 5.5e9).abs() / 5.5e9 <= 0.01, "f_r0 {f_r0}");

    // coupling phases are reported in the couple step
    let theta = value_of(&text, "theta");
    let psi = value_of(&text, "psi");
    assert!(theta > 0.0 && psi > theta);

    println!("[PASS] criterion 12a: walkthrough is deterministic and lands in the design windows");
}

#[test]
fn criterion_12_csv_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("sweep.csv");
    let points = 10001usize;
    let out = spakit(&[
        "response",
        "--f-r", "5.5GHz",
        "--q-int", "1e6",
        "--q-ext", "15000",
        "--f-start", "5.498GHz",
        "--f-stop", "5.502GHz",
        "--points", "10001",
        "--out", csv_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);

    let model = ResonanceModel::new(
        Frequency::new(5.5e9).unwrap(),
        QualityFactors::new(1e6, 15000.0).unwrap(),
    );
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next().unwrap(), "freq_hz,s_mag_db,s_phase_deg");
    let mut rows = 0usize;
    let mut prev_f = f64::NEG_INFINITY;
    for line in lines {
        let mut cols = line.split(',');
        let f: f64 = cols.next().unwrap().parse().unwrap();
        let mag_db: f64 = cols.next().unwrap().parse().unwrap();
        let phase_deg: f64 = cols.next().unwrap().parse().unwrap();
        assert!(cols.next().is_none(), "trailing column in '{line}'");
        assert!(f > prev_f, "frequencies not strictly increasing");
        prev_f = f;

        let s = dip_response(&model, Frequency::new(f).unwrap());
        let mag = 10f64.powf(mag_db / 20.0);
        assert!(
            ((mag - s.norm()) / s.norm()).abs() <= 1e-9,
            "|S| mismatch at {f}: {mag} vs {}",
            s.norm()
        );
        let phase = s.arg().to_degrees();
        assert!(
            (phase_deg - phase).abs() <= 1e-9 * phase.abs().max(1.0),
            "phase mismatch at {f}"
        );
        rows += 1;
    }
    assert_eq!(rows, points, "row count");
    println!("[PASS] criterion 12b: CSV re-parse matches the in-memory sweep to 1e-9 relative");
}

#[test]
fn criterion_12_exit_code_contract() {
    let dir = tempfile::tempdir().unwrap();
    let ok_csv = dir.path().join("ok.csv");
    let ok_csv = ok_csv.to_str().unwrap();

    let mut stages_ok = tempfile::NamedTempFile::new().unwrap();
    writeln!(stages_ok, "20, 0.15\n0, 4").unwrap();
    let stages_ok = stages_ok.path().to_str().unwrap().to_owned();
    let mut stages_bad = tempfile::NamedTempFile::new().unwrap();
    writeln!(stages_bad, "garbage").unwrap();
    let stages_bad = stages_bad.path().to_str().unwrap().to_owned();

    // f64 value of pi/2; |cos| = 6.1e-17 sits inside the divergence guard
    let half_pi = "1.5707963267948966";

    let cases: Vec<(&str, Vec<&str>, i32)> = vec![
        ("cpw analyze ok", vec!["cpw", "analyze", "--w", "10um", "--s", "6um", "--h", "550um", "--er", "11.7"], 0),
        ("cpw analyze domain", vec!["cpw", "analyze", "--w", "10um", "--s", "6um", "--h", "550um", "--er", "0.5"], 1),
        ("cpw analyze usage", vec!["cpw", "analyze", "--w", "10um", "--h", "550um", "--er", "11.7"], 2),
        ("cpw synth ok", vec!["cpw", "synth", "--w", "10um", "--h", "550um", "--er", "11.7", "--z0", "50"], 0),
        ("cpw synth domain", vec!["cpw", "synth", "--w", "10um", "--h", "550um", "--er", "11.7", "--z0", "1"], 1),
        ("cpw synth usage", vec!["cpw", "synth", "--w", "10um", "--h", "550um", "--er", "11.7"], 2),
        ("resonator ok", vec!["resonator", "--mode", "quarter", "--freq", "5.5GHz", "--eps-eff", "6.3"], 0),
        ("resonator domain", vec!["resonator", "--mode", "quarter", "--freq", "5.5GHz", "--eps-eff", "0.5"], 1),
        ("resonator usage", vec!["resonator", "--mode", "quarter", "--freq", "5.5GHz", "--length", "5mm", "--eps-eff", "6.3"], 2),
        ("couple ok", vec!["couple", "--l-open", "0.3mm", "--l-couple", "0.4mm", "--l-short", "4.73mm", "--eps-eff", "6.3", "--kappa", "0.093"], 0),
        ("couple domain", vec!["couple", "--l-open", "0", "--l-couple", "0.4mm", "--l-short", "4.73mm", "--eps-eff", "6.3", "--kappa", "0.093"], 1),
        ("couple usage", vec!["couple", "--l-open", "0.3mm", "--l-couple", "0.4mm", "--l-short", "4.73mm", "--eps-eff", "6.3"], 2),
        ("response ok", vec!["response", "--f-r", "5.5GHz", "--q-int", "1e6", "--q-ext", "15000", "--f-start", "5.498GHz", "--f-stop", "5.502GHz", "--points", "101", "--out", ok_csv], 0),
        ("response domain", vec!["response", "--f-r", "5.5GHz", "--q-int", "1e6", "--q-ext", "0", "--f-start", "5.498GHz", "--f-stop", "5.502GHz", "--points", "101", "--out", ok_csv], 1),
        ("response usage", vec!["response", "--f-r", "5.5GHz", "--q-int", "1e6", "--q-ext", "15000", "--f-start", "5.5GHz", "--f-stop", "5.5GHz", "--points", "101", "--out", ok_csv], 2),
        ("amp sql ok", vec!["amp", "sql", "--f", "6GHz"], 0),
        ("amp sql domain", vec!["amp", "sql", "--f", "0"], 1),
        ("amp sql usage", vec!["amp", "sql"], 2),
        ("amp gbw ok", vec!["amp", "gbw", "--gain-db", "20", "--kappa", "60MHz"], 0),
        ("amp gbw domain", vec!["amp", "gbw", "--gain-db", "-1", "--kappa", "60MHz"], 1),
        ("amp gbw usage", vec!["amp", "gbw", "--gain-db", "20"], 2),
        ("amp haus-caves ok", vec!["amp", "haus-caves", "--gain-db", "20", "--f", "6GHz"], 0),
        ("amp haus-caves domain", vec!["amp", "haus-caves", "--gain-db", "-10", "--f", "6GHz"], 1),
        ("amp haus-caves usage", vec!["amp", "haus-caves", "--gain-db", "20"], 2),
        ("amp mix ok", vec!["amp", "mix", "--pump", "12GHz", "--signal", "5GHz", "--process", "3wm"], 0),
        ("amp mix domain", vec!["amp", "mix", "--pump", "5GHz", "--signal", "12GHz", "--process", "3wm"], 1),
        ("amp mix usage", vec!["amp", "mix", "--pump", "12GHz", "--signal", "5GHz", "--process", "xwm"], 2),
        ("chain ok", vec!["chain", "--stages", &stages_ok], 0),
        ("chain domain", vec!["chain", "--stages", &stages_bad], 1),
        ("chain usage", vec!["chain"], 2),
        ("nonlinear lj ok", vec!["nonlinear", "lj", "--ic", "1uA", "--phase", "0"], 0),
        ("nonlinear lj domain", vec!["nonlinear", "lj", "--ic", "1uA", "--phase", half_pi], 1),
        ("nonlinear lj usage", vec!["nonlinear", "lj", "--phase", "0"], 2),
        ("nonlinear lk ok", vec!["nonlinear", "lk", "--lk0", "1nH", "--istar", "1mA", "--i", "1mA"], 0),
        ("nonlinear lk domain", vec!["nonlinear", "lk", "--lk0", "1nH", "--istar", "0", "--i", "1mA"], 1),
        ("nonlinear lk usage", vec!["nonlinear", "lk", "--lk0", "1nH", "--istar", "1mA"], 2),
        ("nonlinear ic-current ok", vec!["nonlinear", "ic-current", "--ic", "2uA", "--phase", "0.5235987755982988"], 0),
        ("nonlinear ic-current domain", vec!["nonlinear", "ic-current", "--ic", "0", "--phase", "0"], 1),
        ("nonlinear ic-current usage", vec!["nonlinear", "ic-current", "--ic", "2uA"], 2),
        ("design walkthrough ok", vec!["design", "walkthrough"], 0),
        ("design walkthrough domain", vec!["design", "walkthrough", "--kappa", "1.5"], 1),
        ("design walkthrough usage", vec!["design", "walkthrough", "--points", "1"], 2),
    ];

    for (name, args, expected) in cases {
        let out = spakit(&args);
        assert_eq!(
            code(&out),
            expected,
            "{name}: expected exit {expected}, got {} (stderr: {})",
            code(&out),
            String::from_utf8_lossy(&out.stderr)
        );
    }
    println!("[PASS] criterion 12c: exit-code contract holds for success/domain/usage across all commands");
}

#[test]
fn criterion_12_command_determinism() {
    let commands: Vec<Vec<&str>> = vec![
        vec!["cpw", "analyze", "--w", "10um", "--s", "6um", "--h", "550um", "--er", "11.7"],
        vec!["cpw", "synth", "--w", "10um", "--h", "550um", "--er", "11.7", "--z0", "50"],
        vec!["resonator", "--mode", "half", "--length", "10.86mm", "--eps-eff", "6.3"],
        vec!["couple", "--l-open", "0.3mm", "--l-couple", "0.4mm", "--l-short", "4.73mm", "--eps-eff", "6.3", "--kappa", "0.093"],
        vec!["amp", "sql", "--f", "6GHz"],
        vec!["amp", "gbw", "--gain-db", "20", "--kappa", "60MHz"],
        vec!["amp", "haus-caves", "--gain-db", "20", "--f", "6GHz"],
        vec!["amp", "mix", "--pump", "11GHz", "--signal", "5.5GHz", "--process", "3wm"],
        vec!["nonlinear", "lj", "--ic", "1uA", "--phase", "0"],
        vec!["nonlinear", "lk", "--lk0", "1nH", "--istar", "1mA", "--i", "0.5mA"],
        vec!["nonlinear", "ic-current", "--ic", "2uA", "--phase", "0.5235987755982988"],
    ];
    for args in commands {
        let a = spakit(&args);
        let b = spakit(&args);
        assert_eq!(code(&a), 0, "{}", String::from_utf8_lossy(&a.stderr));
        assert_eq!(a.stdout, b.stdout, "non-deterministic output for {args:?}");
    }
    println!("[PASS] criterion 12d: identical flags produce byte-identical output");
}
