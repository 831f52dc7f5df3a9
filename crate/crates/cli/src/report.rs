//! Human-report number formatting: 6 significant digits, with magnitudes
//! scaled to convenient engineering units. CSV output elsewhere keeps full
//! double precision; these helpers are for the printed reports only.

/// %g-style formatting with the given number of significant digits. The
/// magnitude is read back from the rounded scientific form so values like
/// 0.99999999 still come out with `digits` significant digits.
pub fn sig(x: f64, digits: usize) -> String {
    if !x.is_finite() || x == 0.0 {
        return format!("{x}");
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (_, exp_str) = sci.split_once('e').expect("scientific format has an exponent");
    let mag: i32 = exp_str.parse().expect("numeric exponent");
    let d = digits as i32;
    if mag < -4 || mag >= d {
        sci
    } else {
        format!("{:.*}", (d - 1 - mag).max(0) as usize, x)
    }
}

/// Six significant digits.
pub fn sig6(x: f64) -> String {
    sig(x, 6)
}

pub fn freq(hz: f64) -> String {
    let (v, unit) = if hz >= 1e9 {
        (hz / 1e9, "GHz")
    } else if hz >= 1e6 {
        (hz / 1e6, "MHz")
    } else if hz >= 1e3 {
        (hz / 1e3, "kHz")
    } else {
        (hz, "Hz")
    };
    format!("{} {unit}", sig6(v))
}

pub fn length(m: f64) -> String {
    let (v, unit) = if m >= 1.0 {
        (m, "m")
    } else if m >= 1e-3 {
        (m / 1e-3, "mm")
    } else {
        (m / 1e-6, "um")
    };
    format!("{} {unit}", sig6(v))
}

pub fn temperature(k: f64) -> String {
    if k >= 1.0 {
        format!("{} K", sig6(k))
    } else {
        format!("{} mK", sig6(k / 1e-3))
    }
}

pub fn inductance(h: f64) -> String {
    format!("{} nH", sig6(h / 1e-9))
}

pub fn current(a: f64) -> String {
    let mag = a.abs();
    if mag >= 1.0 {
        format!("{} A", sig6(a))
    } else if mag >= 1e-3 {
        format!("{} mA", sig6(a / 1e-3))
    } else {
        format!("{} uA", sig6(a / 1e-6))
    }
}
