//! Error type shared by every module in the crate.

use std::fmt;

/// Errors reported by library operations.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An input lies outside the mathematical or physical domain of an operation.
    Domain(String),
    /// The requested operating point sits where the modeled quantity diverges.
    Divergence(String),
    /// A structurally invalid argument, such as an empty list or an inverted
    /// sweep window.
    Argument(String),
    /// A physically inconsistent configuration, such as a mixing setup whose
    /// idler frequency would be non-positive.
    Configuration(String),
    /// The target impedance falls outside what the synthesis bracket can reach.
    UnachievableImpedance { target: f64, z_min: f64, z_max: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Divergence(msg) => write!(f, "divergence: {msg}"),
            Error::Argument(msg) => write!(f, "invalid argument: {msg}"),
            Error::Configuration(msg) => write!(f, "invalid configuration: {msg}"),
            Error::UnachievableImpedance { target, z_min, z_max } => write!(
                f,
                "target impedance {target} ohm is unachievable; \
                 the search bracket reaches [{z_min:.4}, {z_max:.4}] ohm"
            ),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
