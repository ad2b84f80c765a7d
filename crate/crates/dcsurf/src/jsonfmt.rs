//! JSON emission with floats printed at 17 significant digits, which is
//! enough to round-trip any f64 exactly.

use serde::Serialize;
use serde_json::ser::Formatter;
use std::io;

struct SigDigits17;

impl Formatter for SigDigits17 {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        // one leading digit + 16 fractional digits = 17 significant digits
        write!(writer, "{value:.16e}")
    }
}

/// Serialize to a JSON string with 17-significant-digit floats.
pub fn to_string<T: Serialize>(value: &T) -> serde_json::Result<String> {
    let mut out = Vec::with_capacity(1024);
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SigDigits17);
    value.serialize(&mut ser)?;
    Ok(String::from_utf8(out).expect("serde_json emits UTF-8"))
}
