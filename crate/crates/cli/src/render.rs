use std::fs;
use std::path::PathBuf;

use serde_json::Value;

use chinos_core::Result;

/// Twelve significant digits, trailing zeros dropped, `-0` folded to `0`.
pub fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x.is_finite() { "0".into() } else { x.to_string() };
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    rounded.to_string()
}

/// Rounds every float in a JSON tree to twelve significant digits.
pub fn round_json(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().expect("f64 number");
            let r: f64 = sig12(x).parse().expect("rendered float parses");
            serde_json::Number::from_f64(r)
                .map(Value::Number)
                .unwrap_or(Value::Null)
        }
        Value::Array(a) => Value::Array(a.into_iter().map(round_json).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, round_json(v))).collect()),
        other => other,
    }
}

pub fn csv_string(header: &[String], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    let bytes = w.into_inner().map_err(|e| std::io::Error::other(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialise");
    s.push('\n');
    s
}

/// Data goes to `--output` when given, with the summary on stdout.
/// Otherwise data goes to stdout and the summary to stderr.
pub struct Sink {
    pub output: Option<PathBuf>,
}

impl Sink {
    pub fn emit(&self, data: &str, summary: &str) -> Result<()> {
        match &self.output {
            Some(path) => {
                fs::write(path, data)?;
                println!("{summary}");
                println!("wrote {}", path.display());
            }
            None => {
                print!("{data}");
                eprintln!("{summary}");
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_digits() {
        assert_eq!(sig12(41.0 / 168.0), "0.244047619048");
        assert_eq!(sig12(0.2), "0.2");
        assert_eq!(sig12(-0.0), "0");
        assert_eq!(sig12(1.0 / 3.0), "0.333333333333");
        assert_eq!(sig12(2.0 / 3.0), "0.666666666667");
        assert_eq!(sig12(1e-20), "0.00000000000000000001");
    }

    #[test]
    fn json_rounding_reaches_nested_values() {
        let v = serde_json::json!({"a": [1.0 / 3.0, {"b": 0.1 + 0.2}], "n": 3});
        let r = round_json(v);
        assert_eq!(r["a"][0].as_f64().unwrap(), 0.333333333333);
        assert_eq!(r["a"][1]["b"].as_f64().unwrap(), 0.3);
        assert_eq!(r["n"], 3);
    }
}
