//! Angle arguments: plain radians or closed forms such as `pi/3`, `2pi/3`,
//! `-pi/4` and `3*pi/2`.

use std::f64::consts::PI;

pub fn parse_angle(s: &str) -> Result<f64, String> {
    let t = s.trim().to_ascii_lowercase().replace(' ', "");
    if t.is_empty() {
        return Err("empty angle".into());
    }
    let Some(at) = t.find("pi") else {
        return t
            .parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .ok_or_else(|| format!("cannot read {s:?} as an angle in radians"));
    };
    let (head, tail) = (&t[..at], &t[at + 2..]);
    let head = head.strip_suffix('*').unwrap_or(head);
    let coeff = match head {
        "" | "+" => 1.0,
        "-" => -1.0,
        h => h.parse::<f64>().map_err(|_| format!("bad coefficient in {s:?}"))?,
    };
    let denom = match tail {
        "" => 1.0,
        d => d
            .strip_prefix('/')
            .and_then(|d| d.parse::<f64>().ok())
            .filter(|d| *d != 0.0)
            .ok_or_else(|| format!("bad denominator in {s:?}"))?,
    };
    let x = coeff * PI / denom;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(format!("angle {s:?} is not finite"))
    }
}
