//! Unit-suffixed quantity parsing for flags, config files, and stage files.
//!
//! A value is a number followed by an optional unit suffix, with optional
//! whitespace in between ("6GHz", "6 GHz", "10um"). Unsuffixed numbers are
//! SI base units. Suffix matching is case-sensitive and dimension-checked
//! against what the flag expects.

use std::fmt;

/// Physical dimension a value is expected to carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dim {
    Frequency,
    Length,
    Inductance,
    Capacitance,
    Current,
    Temperature,
    Impedance,
    Decibel,
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Dim::Frequency => "frequency",
            Dim::Length => "length",
            Dim::Inductance => "inductance",
            Dim::Capacitance => "capacitance",
            Dim::Current => "current",
            Dim::Temperature => "temperature",
            Dim::Impedance => "impedance",
            Dim::Decibel => "dB",
        };
        f.write_str(name)
    }
}

/// Suffix table with decimal exponents. Scaling multiplies or divides by an
/// exactly-representable power of ten, so "10um" parses bit-identical to
/// "1e-5".
const SUFFIXES: &[(&str, Dim, i32)] = &[
    ("GHz", Dim::Frequency, 9),
    ("MHz", Dim::Frequency, 6),
    ("kHz", Dim::Frequency, 3),
    ("Hz", Dim::Frequency, 0),
    ("nm", Dim::Length, -9),
    ("um", Dim::Length, -6),
    ("mm", Dim::Length, -3),
    ("cm", Dim::Length, -2),
    ("m", Dim::Length, 0),
    ("pH", Dim::Inductance, -12),
    ("nH", Dim::Inductance, -9),
    ("uH", Dim::Inductance, -6),
    ("H", Dim::Inductance, 0),
    ("fF", Dim::Capacitance, -15),
    ("pF", Dim::Capacitance, -12),
    ("nF", Dim::Capacitance, -9),
    ("F", Dim::Capacitance, 0),
    ("nA", Dim::Current, -9),
    ("uA", Dim::Current, -6),
    ("mA", Dim::Current, -3),
    ("A", Dim::Current, 0),
    ("mK", Dim::Temperature, -3),
    ("K", Dim::Temperature, 0),
    ("ohm", Dim::Impedance, 0),
    ("dB", Dim::Decibel, 0),
];

fn scale(v: f64, exp: i32) -> f64 {
    use std::cmp::Ordering;
    match exp.cmp(&0) {
        Ordering::Equal => v,
        Ordering::Greater => v * 10f64.powi(exp),
        Ordering::Less => v / 10f64.powi(-exp),
    }
}

/// Parses a number with an optional unit suffix of the given dimension into
/// SI base units.
pub fn parse_with_dim(s: &str, dim: Dim) -> Result<f64, String> {
    let t = s.trim();
    let boundary = t.len()
        - t.bytes()
            .rev()
            .take_while(|b| b.is_ascii_alphabetic())
            .count();
    let (num_part, suffix) = t.split_at(boundary);
    let num_part = num_part.trim();
    if suffix.is_empty() {
        return num_part
            .parse::<f64>()
            .map_err(|_| format!("'{t}' is not a number"));
    }
    match SUFFIXES.iter().find(|(sfx, _, _)| *sfx == suffix) {
        None => Err(format!("unknown unit suffix '{suffix}' in '{t}'")),
        Some((_, d, exp)) if *d == dim => {
            let v: f64 = num_part
                .parse()
                .map_err(|_| format!("'{num_part}' is not a number"))?;
            Ok(scale(v, *exp))
        }
        Some((_, d, _)) => Err(format!("expected a {dim} value, but '{suffix}' is a {d} suffix")),
    }
}

/// Plain dimensionless number (permittivities, quality factors, phases,
/// coupling coefficients). Accepts "inf" for a lossless internal Q.
pub fn parse_bare(s: &str) -> Result<f64, String> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| format!("'{s}' is not a number"))
}

pub fn parse_frequency(s: &str) -> Result<f64, String> {
    parse_with_dim(s, Dim::Frequency)
}

pub fn parse_length(s: &str) -> Result<f64, String> {
    parse_with_dim(s, Dim::Length)
}

pub fn parse_inductance(s: &str) -> Result<f64, String> {
    parse_with_dim(s, Dim::Inductance)
}

pub fn parse_current(s: &str) -> Result<f64, String> {
    parse_with_dim(s, Dim::Current)
}

pub fn parse_temperature(s: &str) -> Result<f64, String> {
    parse_with_dim(s, Dim::Temperature)
}

pub fn parse_impedance(s: &str) -> Result<f64, String> {
    parse_with_dim(s, Dim::Impedance)
}

pub fn parse_db(s: &str) -> Result<f64, String> {
    parse_with_dim(s, Dim::Decibel)
}
