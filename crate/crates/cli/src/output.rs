//! Deterministic report serialization.
//!
//! Every floating-point value is printed with 12 significant digits
//! (trailing zeros trimmed), so repeated runs of the same command are
//! byte-identical.

use std::io;

use serde::Serialize;
use serde_json::ser::Formatter;
use serde_json::Value;

/// Formats a float with 12 significant digits, `%g`-style: plain decimal
/// notation for moderate exponents, scientific otherwise.
pub fn fmt_g12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{x:.11e}");
    let (_, exp) = sci.split_once('e').expect("exponent marker");
    let e: i32 = exp.parse().expect("numeric exponent");
    if (-4..12).contains(&e) {
        let prec = (11 - e).max(0) as usize;
        trim_zeros(format!("{x:.prec$}"))
    } else {
        let (mantissa, _) = sci.split_once('e').expect("exponent marker");
        format!("{}e{e}", trim_zeros(mantissa.to_string()))
    }
}

fn trim_zeros(mut s: String) -> String {
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    s
}

struct SigFigFormatter;

impl Formatter for SigFigFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        writer.write_all(fmt_g12(value).as_bytes())
    }

    fn write_f32<W>(&mut self, writer: &mut W, value: f32) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        writer.write_all(fmt_g12(value as f64).as_bytes())
    }
}

/// Serializes a JSON report compactly with the fixed float format.
pub fn to_json_line(value: &Value) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SigFigFormatter);
    value.serialize(&mut ser).expect("in-memory serialization");
    String::from_utf8(out).expect("serialized JSON is UTF-8")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_decimals() {
        assert_eq!(fmt_g12(0.0), "0");
        assert_eq!(fmt_g12(-0.0), "0");
        assert_eq!(fmt_g12(1.0), "1");
        assert_eq!(fmt_g12(-2.75), "-2.75");
        assert_eq!(fmt_g12(1.0 / 3.0), "0.333333333333");
        assert_eq!(fmt_g12(2.0f64.sqrt()), "1.41421356237");
        assert_eq!(fmt_g12(0.0001), "0.0001");
    }

    #[test]
    fn scientific_tails() {
        assert_eq!(fmt_g12(1.5e-7), "1.5e-7");
        assert_eq!(fmt_g12(1e14), "1e14");
        assert_eq!(fmt_g12(123456789012.0), "123456789012");
    }

    #[test]
    fn json_line_uses_fixed_floats() {
        let v = serde_json::json!({"a": 1.0 / 3.0, "b": 2, "c": "s"});
        assert_eq!(to_json_line(&v), r#"{"a":0.333333333333,"b":2,"c":"s"}"#);
    }
}
