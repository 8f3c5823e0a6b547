//! Gauss hypergeometric function `₂F₁(a, b; c; z)` for real `z < 1`.
//!
//! Branches: the power series for `|z| ≤ ½`; the `1 − z` connection formula
//! on `(½, 1)`; the `1/(1 − z)` linear transformation for `z < −½`, or
//! Pfaff's `z/(z − 1)` when `b − a` is (close to) an integer.

use num_complex::Complex64;

use super::gamma::{gamma_ratio, is_gamma_pole};
use crate::error::{Error, Result};

const SERIES_TOL: f64 = 1e-17;
const MAX_TERMS: usize = 20_000_000;
/// Parameter differences closer than this to an integer avoid the
/// connection formulas, whose Γ-coefficients blow up there.
const INTEGER_GUARD: f64 = 1e-3;

fn near_integer(z: Complex64) -> bool {
    (z.re - z.re.round()).abs() < INTEGER_GUARD && z.im.abs() < INTEGER_GUARD
}

/// Direct power series, valid for `|z| < 1`.
pub fn hyp2f1_series(a: Complex64, b: Complex64, c: Complex64, z: f64) -> Result<Complex64> {
    if is_gamma_pole(c) {
        return Err(Error::pole("hyp2f1 (c)", c));
    }
    if z.abs() >= 1.0 {
        return Err(Error::domain(format!("hyp2f1 series needs |z| < 1, got {z}")));
    }
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut small = 0;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
        sum += term;
        if term.norm() <= SERIES_TOL * sum.norm() {
            small += 1;
            if small >= 3 {
                return Ok(sum);
            }
        } else {
            small = 0;
        }
        if term == Complex64::new(0.0, 0.0) {
            return Ok(sum);
        }
    }
    Err(Error::Accuracy {
        what: "hyp2f1 series".into(),
        achieved: term.norm() / sum.norm(),
        required: SERIES_TOL,
    })
}

fn one_minus_z(a: Complex64, b: Complex64, c: Complex64, z: f64) -> Result<Complex64> {
    let w = 1.0 - z;
    let d = c - a - b;
    let t1 = gamma_ratio(&[c, d], &[c - a, c - b])? * hyp2f1_series(a, b, 1.0 - d, w)?;
    let t2 = gamma_ratio(&[c, -d], &[a, b])?
        * (d * w.ln()).exp()
        * hyp2f1_series(c - a, c - b, d + 1.0, w)?;
    Ok(t1 + t2)
}

fn inverse_one_minus_z(a: Complex64, b: Complex64, c: Complex64, z: f64) -> Result<Complex64> {
    let w = 1.0 / (1.0 - z);
    let l = (1.0 - z).ln();
    let t1 = gamma_ratio(&[c, b - a], &[b, c - a])?
        * (-a * l).exp()
        * hyp2f1_series(a, c - b, a - b + 1.0, w)?;
    let t2 = gamma_ratio(&[c, a - b], &[a, c - b])?
        * (-b * l).exp()
        * hyp2f1_series(b, c - a, b - a + 1.0, w)?;
    Ok(t1 + t2)
}

/// Pfaff: `₂F₁(a,b;c;z) = (1−z)^{−a} ₂F₁(a, c−b; c; z/(z−1))`.
pub fn hyp2f1_pfaff(a: Complex64, b: Complex64, c: Complex64, z: f64) -> Result<Complex64> {
    let w = z / (z - 1.0);
    Ok((-a * (1.0 - z).ln()).exp() * hyp2f1(a, c - b, c, w)?)
}

pub fn hyp2f1(a: Complex64, b: Complex64, c: Complex64, z: f64) -> Result<Complex64> {
    if !(z < 1.0) {
        return Err(Error::domain(format!("hyp2f1 needs z < 1, got {z}")));
    }
    if is_gamma_pole(c) {
        return Err(Error::pole("hyp2f1 (c)", c));
    }
    if z == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    if z.abs() <= 0.5 {
        return hyp2f1_series(a, b, c, z);
    }
    if z > 0.5 {
        if near_integer(c - a - b) {
            return hyp2f1_series(a, b, c, z);
        }
        return one_minus_z(a, b, c, z);
    }
    if near_integer(b - a) {
        return hyp2f1_pfaff(a, b, c, z);
    }
    inverse_one_minus_z(a, b, c, z)
}
