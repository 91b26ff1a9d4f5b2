//! Canonical JSON output.
//!
//! Object keys are sorted, floats are rounded to 15 significant digits and
//! written in shortest round-trip form, and magnitudes below [`CHOP`] print
//! as `0.0`. Parsing the output and re-emitting it yields identical bytes.

use serde::Serialize;
use serde_json::Value;

use crate::quantum::{Complex, StateVector};

/// Floats with smaller magnitude are emitted as zero.
pub const CHOP: f64 = 1e-15;

const SIGNIFICANT_DIGITS: usize = 15;

pub fn round_float(x: f64) -> f64 {
    if !x.is_finite() || x.abs() < CHOP {
        return if x.is_finite() { 0.0 } else { x };
    }
    let rounded: f64 = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
        .parse()
        .expect("formatted float parses");
    rounded + 0.0
}

fn canonicalize(value: Value) -> Value {
    match value {
        Value::Number(n) if n.is_f64() => {
            let x = round_float(n.as_f64().expect("f64 number"));
            serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
        }
        Value::Array(items) => Value::Array(items.into_iter().map(canonicalize).collect()),
        Value::Object(map) => {
            Value::Object(map.into_iter().map(|(k, v)| (k, canonicalize(v))).collect())
        }
        other => other,
    }
}

pub fn to_canonical_value<T: Serialize>(value: &T) -> Value {
    canonicalize(serde_json::to_value(value).expect("report types serialize"))
}

/// Pretty-printed canonical JSON, newline-terminated.
pub fn to_canonical_string<T: Serialize>(value: &T) -> String {
    let mut out =
        serde_json::to_string_pretty(&to_canonical_value(value)).expect("values serialize");
    out.push('\n');
    out
}

/// `[re, im]`.
pub fn complex_pair(z: Complex) -> [f64; 2] {
    [z.re, z.im]
}

pub fn state_pairs(s: &StateVector) -> Vec<[f64; 2]> {
    s.amplitudes().iter().copied().map(complex_pair).collect()
}
