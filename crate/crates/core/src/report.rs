//! Stable number formatting for reports: 12 significant digits, shortest
//! round-trip form, lowercase exponent.

use num_complex::Complex64 as C64;

pub const SIG_DIGITS: usize = 12;

/// x rounded to 12 significant digits. Negative zero is normalized.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    let r: f64 = format!("{:.*e}", SIG_DIGITS - 1, x).parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

pub fn complex_pair(z: C64) -> [f64; 2] {
    [round_sig(z.re), round_sig(z.im)]
}

/// Text form of `round_sig(x)`: positional for moderate magnitudes,
/// exponent form otherwise.
pub fn fmt_sig(x: f64) -> String {
    let r = round_sig(x);
    let a = r.abs();
    if r == 0.0 {
        "0".into()
    } else if (1e-4..1e15).contains(&a) {
        format!("{r}")
    } else {
        format!("{r:e}")
    }
}

/// JSON value of a float after rounding.
pub fn json_f64(x: f64) -> serde_json::Value {
    serde_json::json!(round_sig(x))
}

pub fn json_complex(z: C64) -> serde_json::Value {
    serde_json::json!(complex_pair(z))
}
