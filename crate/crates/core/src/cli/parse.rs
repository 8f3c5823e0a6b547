//! Literal parsing for the command line and config files.

use std::collections::BTreeMap;
use std::path::Path;

use num_complex::Complex64;

use crate::error::{Error, Result};

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidParams(msg.into())
}

fn real(s: &str, whole: &str) -> Result<f64> {
    s.parse::<f64>()
        .ok()
        .filter(|x| x.is_finite())
        .ok_or_else(|| usage(format!("`{whole}` is not a complex literal (a+bi)")))
}

/// `a`, `bi`, `a+bi` or `a-bi`, no spaces; `i` alone is 1i.
pub fn parse_complex(s: &str) -> Result<Complex64> {
    if s.is_empty() || s.contains(char::is_whitespace) {
        return Err(usage(format!("`{s}` is not a complex literal (a+bi, no spaces)")));
    }
    let Some(body) = s.strip_suffix('i') else {
        return Ok(Complex64::new(real(s, s)?, 0.0));
    };
    // split at the last sign that is not a leading sign or part of an exponent
    let bytes = body.as_bytes();
    let cut = (1..bytes.len())
        .rev()
        .find(|&j| (bytes[j] == b'+' || bytes[j] == b'-') && !matches!(bytes[j - 1], b'e' | b'E'));
    let imag = |t: &str| -> Result<f64> {
        match t {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => real(t, s),
        }
    };
    match cut {
        Some(j) => Ok(Complex64::new(real(&body[..j], s)?, imag(&body[j..])?)),
        None => Ok(Complex64::new(0.0, imag(body)?)),
    }
}

/// Comma list `a,b,c` or geometric range `start:stop:count`.
pub fn parse_grid(s: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = s.split(':').collect();
    match parts.len() {
        1 => s.split(',').map(|t| real(t, s).map_err(|_| usage(format!("bad grid entry `{t}`")))).collect(),
        3 => {
            let lo = real(parts[0], s)?;
            let hi = real(parts[1], s)?;
            let n: usize = parts[2].parse().map_err(|_| usage(format!("bad grid count `{}`", parts[2])))?;
            crate::spectral::geometric_grid(lo, hi, n).map_err(|e| usage(e.to_string()))
        }
        _ => Err(usage(format!("`{s}` is neither a comma list nor start:stop:count"))),
    }
}

/// A grid of positive integers; geometric ranges are rounded and deduplicated.
pub fn parse_int_grid(s: &str) -> Result<Vec<u64>> {
    let geometric = s.contains(':');
    let mut out = Vec::new();
    for x in parse_grid(s)? {
        if !(x >= 0.0) || x > 9.0e15 {
            return Err(usage(format!("grid value {x} is not a nonnegative integer")));
        }
        let r = x.round();
        if !geometric && r != x {
            return Err(usage(format!("grid value {x} is not an integer")));
        }
        let r = r as u64;
        if !(geometric && out.last() == Some(&r)) {
            out.push(r);
        }
    }
    Ok(out)
}

/// `key = value` lines; `#` starts a comment.
pub fn parse_config(text: &str) -> Result<BTreeMap<String, String>> {
    let mut m = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| usage(format!("config line {}: expected key=value", i + 1)))?;
        let (k, v) = (k.trim(), v.trim());
        if k.is_empty() || v.is_empty() {
            return Err(usage(format!("config line {}: empty key or value", i + 1)));
        }
        m.insert(k.to_string(), v.to_string());
    }
    Ok(m)
}

pub fn read_config(path: &Path) -> Result<BTreeMap<String, String>> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("config {}: {e}", path.display())))?;
    parse_config(&text)
}
