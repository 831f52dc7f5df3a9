//! Line-oriented `key = value` config files.
//!
//! `#` starts a comment, blank lines are skipped, unknown keys are rejected
//! with their line number, and every value is parsed and validated against
//! its target dimension at load time. Flags always override config values;
//! a key appearing twice keeps the later value.

use std::collections::HashMap;
use std::path::Path;

use crate::units::{parse_bare, parse_with_dim, Dim};

/// Keys accepted in a config file and the dimension each parses as.
/// `points` is handled separately as an integer.
const KEYS: &[(&str, Option<Dim>)] = &[
    ("w", Some(Dim::Length)),
    ("s", Some(Dim::Length)),
    ("h", Some(Dim::Length)),
    ("eps_r", None),
    ("l_open", Some(Dim::Length)),
    ("l_couple", Some(Dim::Length)),
    ("l_short", Some(Dim::Length)),
    ("eps_eff", None),
    ("kappa", None),
    ("q_int", None),
    ("q_ext", None),
    ("f_r", Some(Dim::Frequency)),
    ("f_start", Some(Dim::Frequency)),
    ("f_stop", Some(Dim::Frequency)),
];

/// Parsed config values, already in SI base units.
#[derive(Debug, Clone, Default)]
pub struct Config {
    values: HashMap<&'static str, f64>,
    points: Option<usize>,
}

impl Config {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Loads and validates a config file. Error strings carry the offending
    /// line number.
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        let mut cfg = Self::empty();
        for (idx, raw_line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw_line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                format!("config line {line_no}: expected 'key = value', got '{raw_line}'")
            })?;
            let (key, value) = (key.trim(), value.trim());
            cfg.set(key, value)
                .map_err(|e| format!("config line {line_no}: {e}"))?;
        }
        Ok(cfg)
    }

    fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        if key == "points" {
            let n: usize = value
                .parse()
                .map_err(|_| format!("'{value}' is not a point count"))?;
            self.points = Some(n);
            return Ok(());
        }
        let (name, dim) = KEYS
            .iter()
            .find(|(name, _)| *name == key)
            .ok_or_else(|| format!("unknown key '{key}'"))?;
        let v = match dim {
            Some(d) => parse_with_dim(value, *d)?,
            None => parse_bare(value)?,
        };
        validate(name, v)?;
        self.values.insert(name, v);
        Ok(())
    }

    pub fn get(&self, key: &str) -> Option<f64> {
        self.values.get(key).copied()
    }

    pub fn points(&self) -> Option<usize> {
        self.points
    }
}

/// Target-type invariants, enforced when the file is read so that errors
/// carry line numbers.
fn validate(key: &str, v: f64) -> Result<(), String> {
    let ok = match key {
        "w" | "s" | "h" | "l_open" | "l_couple" | "l_short" | "f_r" | "f_start" | "f_stop" => {
            v.is_finite() && v > 0.0
        }
        "eps_r" | "eps_eff" => v.is_finite() && v >= 1.0,
        "kappa" => v.is_finite() && (0.0..1.0).contains(&v),
        "q_int" => v > 0.0, // +inf allowed for a lossless resonator
        "q_ext" => v.is_finite() && v > 0.0,
        _ => unreachable!("validated keys are listed in KEYS"),
    };
    if ok {
        Ok(())
    } else {
        Err(format!("value {v} violates the invariants of '{key}'"))
    }
}
