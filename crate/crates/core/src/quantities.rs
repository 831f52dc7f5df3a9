//! Unit-carrying scalar quantities in SI base units.
//!
//! Constructors validate input-side invariants (magnitudes strictly positive,
//! temperatures non-negative, currents signed). Operations elsewhere in the
//! crate build their outputs directly, so a computed value such as a signed
//! junction inductance can carry through without re-validation.

use crate::error::{Error, Result};

macro_rules! positive_quantity {
    ($(#[$doc:meta])* $name:ident, $unit:literal, $getter:ident) => {
        $(#[$doc])*
        #[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
        pub struct $name(f64);

        impl $name {
            /// Wraps a value in SI base units; rejects non-positive or
            /// non-finite input.
            pub fn new(value: f64) -> Result<Self> {
                if value.is_finite() && value > 0.0 {
                    Ok(Self(value))
                } else {
                    Err(Error::Domain(format!(
                        concat!(
                            stringify!($name),
                            " must be positive and finite in ",
                            $unit,
                            ", got {}"
                        ),
                        value
                    )))
                }
            }

            #[doc = concat!("Value in ", $unit, ".")]
            pub fn $getter(self) -> f64 {
                self.0
            }

            /// Crate-internal constructor for computed outputs. Not every
            /// quantity has one today.
            #[allow(dead_code)]
            pub(crate) fn raw(value: f64) -> Self {
                Self(value)
            }
        }
    };
}

positive_quantity!(
    /// A frequency in hertz.
    Frequency, "Hz", hz
);
positive_quantity!(
    /// A length in meters.
    Length, "m", meters
);
positive_quantity!(
    /// An inductance in henries. Computed junction inductances may carry a
    /// sign; see [`crate::nonlinear::josephson_inductance`].
    Inductance, "H", henries
);
positive_quantity!(
    /// A capacitance in farads.
    Capacitance, "F", farads
);
positive_quantity!(
    /// An impedance magnitude in ohms.
    Impedance, "ohm", ohms
);

/// A current in amperes. Signed: bias currents may run either way.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Current(f64);

impl Current {
    /// Wraps a signed current; rejects non-finite input.
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() {
            Ok(Self(value))
        } else {
            Err(Error::Domain(format!(
                "Current must be finite in A, got {value}"
            )))
        }
    }

    /// Value in amperes.
    pub fn amperes(self) -> f64 {
        self.0
    }
}

/// A temperature in kelvin. Non-negative: noise budgets may carry 0 K stages.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Temperature(f64);

impl Temperature {
    /// Wraps a temperature; rejects negative or non-finite input.
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value >= 0.0 {
            Ok(Self(value))
        } else {
            Err(Error::Domain(format!(
                "Temperature must be non-negative and finite in K, got {value}"
            )))
        }
    }

    /// Value in kelvin.
    pub fn kelvin(self) -> f64 {
        self.0
    }

    pub(crate) fn raw(value: f64) -> Self {
        Self(value)
    }
}
