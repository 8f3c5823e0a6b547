use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Points closer than this to a nonpositive integer count as poles.
pub const GAMMA_POLE_TOL: f64 = 1e-12;

fn ln_2pi_half() -> f64 {
    0.5 * (2.0 * PI).ln()
}

/// Distance to the nearest nonpositive integer, or `None` when `ℜs > 0.5`.
fn pole_distance(s: Complex64) -> Option<f64> {
    if s.re > 0.5 {
        return None;
    }
    let m = s.re.round().min(0.0);
    Some(((s.re - m).powi(2) + s.im * s.im).sqrt())
}

pub fn is_gamma_pole(s: Complex64) -> bool {
    matches!(pole_distance(s), Some(d) if d < GAMMA_POLE_TOL * (1.0 + s.re.abs()))
}

fn ln_gamma_right(z: Complex64) -> Complex64 {
    let z = z - 1.0;
    let mut x = Complex64::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    ln_2pi_half() + (z + 0.5) * t.ln() - t + x.ln()
}

/// `ln sin(πs)` up to a multiple of `2πi`, stable for large `|ℑs|`.
pub(crate) fn ln_sin_pi(s: Complex64) -> Complex64 {
    let n = s.re.round();
    let f = s - n;
    let w = f * PI;
    let parity = Complex64::new(0.0, PI * n);
    if w.im.abs() < 20.0 {
        return w.sin().ln() + parity;
    }
    let i = Complex64::i();
    let core = if w.im > 0.0 {
        // sin w = e^{-iw}(e^{2iw} - 1)/(2i)
        -i * w + (((2.0 * i * w).exp() - 1.0) / (2.0 * i)).ln()
    } else {
        // sin w = e^{iw}(1 - e^{-2iw})/(2i)
        i * w + ((1.0 - (-2.0 * i * w).exp()) / (2.0 * i)).ln()
    };
    core + parity
}

/// A logarithm of `Γ(s)` (not necessarily the principal-branch continuation).
pub fn ln_gamma(s: Complex64) -> Result<Complex64> {
    if is_gamma_pole(s) {
        return Err(Error::pole("gamma", s));
    }
    if s.re >= 0.5 {
        Ok(ln_gamma_right(s))
    } else {
        Ok(Complex64::new(PI.ln(), 0.0) - ln_sin_pi(s) - ln_gamma_right(1.0 - s))
    }
}

pub fn gamma(s: Complex64) -> Result<Complex64> {
    Ok(ln_gamma(s)?.exp())
}

/// `1/Γ(s)`, zero at the poles of Γ.
pub fn rgamma(s: Complex64) -> Complex64 {
    match ln_gamma(s) {
        Ok(l) => (-l).exp(),
        Err(_) => Complex64::new(0.0, 0.0),
    }
}

/// `Π Γ(num) / Π Γ(den)`, evaluated in log space.
///
/// A pole among `num` is an error; a pole among `den` gives 0.
pub fn gamma_ratio(num: &[Complex64], den: &[Complex64]) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    for &z in num {
        acc += ln_gamma(z)?;
    }
    for &z in den {
        match ln_gamma(z) {
            Ok(l) => acc -= l,
            Err(_) => return Ok(Complex64::new(0.0, 0.0)),
        }
    }
    Ok(acc.exp())
}
