//! Perron's formula for `L_k*` on a truncated vertical segment.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::divsum::{lk_star_coefficients, lk_star_tail, shifted_sum, ConvolutionParams};
use crate::error::{Error, Result};
use crate::parallel::par_map;

/// Largest node spacing in `t`.
pub const PERRON_STEP: f64 = 0.05;

const RESEED: usize = 256;

/// Trapezoid weights `h_j/(c+it_j)` on `[−T, T]`.
struct Kernel {
    t0: f64,
    h: f64,
    w: Vec<Complex64>,
}

impl Kernel {
    fn new(c: f64, t: f64) -> Self {
        let n = ((2.0 * t / PERRON_STEP).ceil() as usize).max(1);
        let h = 2.0 * t / n as f64;
        let w = (0..=n)
            .map(|j| {
                let tj = -t + j as f64 * h;
                let e = if j == 0 || j == n { 0.5 * h } else { h };
                e / Complex64::new(c, tj)
            })
            .collect();
        Kernel { t0: -t, h, w }
    }

    /// `i Σ_j w_j e^{i t_j L}`; the phase is advanced by rotation and reseeded
    /// every 256 nodes.
    fn eval(&self, l: f64) -> Complex64 {
        let rot = Complex64::from_polar(1.0, self.h * l);
        let mut acc = Complex64::new(0.0, 0.0);
        let mut ph = Complex64::new(1.0, 0.0);
        for (j, w) in self.w.iter().enumerate() {
            if j % RESEED == 0 {
                ph = Complex64::from_polar(1.0, (self.t0 + j as f64 * self.h) * l);
            }
            acc += ph * w;
            ph *= rot;
        }
        Complex64::new(0.0, 1.0) * acc
    }
}

/// `∫_{c−iT}^{c+iT} e^{sL} ds/s`, by the trapezoid rule in `t`.
pub fn perron_kernel(c: f64, l: f64, t: f64) -> Result<Complex64> {
    if !(c > 0.0 && t >= 0.0 && t.is_finite()) {
        return Err(Error::domain("perron kernel needs c > 0 and finite T ≥ 0"));
    }
    Ok((c * l).exp() * Kernel::new(c, t).eval(l))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PerronDemo {
    /// `ℜs = 1 + |ℜu| + |ℜv| + ε`.
    pub line: f64,
    /// `∫ L_k*(s) X^s ds/s` over the segment, `L_k*` truncated.
    pub integral: Complex64,
    /// `4πi Σ_{n≤X} σ_{2u}(n,χ)σ_{2v}(n−k,ψ)/n^{u+v}`.
    pub sum4pii: Complex64,
    /// `2πi Σ_{m≤X} c_m`, the exact Perron limit of the truncated series.
    pub perron_sum: Complex64,
    /// `integral − perron_sum`.
    pub difference: Complex64,
    /// `integral − sum4pii`.
    pub difference_4pii: Complex64,
    pub nodes: usize,
    /// Envelope for the omitted `m > series_T` part of the integral;
    /// infinite when the coefficient envelope does not converge on the line.
    pub series_tail: f64,
}

/// Truncated Perron integral of `L_k*(s) X^s/s` against the partial sum.
pub fn perron_demo(p: &ConvolutionParams, x: f64, t: f64, series_t: u64) -> Result<PerronDemo> {
    if !(x > 1.0) || x.fract() == 0.0 || !x.is_finite() {
        return Err(Error::domain(format!("X = {x} must be a non-integer > 1")));
    }
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::domain(format!("T = {t} must be positive")));
    }
    let xf = x.floor() as u64;
    if series_t < xf {
        return Err(Error::domain(format!("series_T = {series_t} must be at least ⌊X⌋ = {xf}")));
    }
    let c = 1.0 + p.width() + p.epsilon();
    let coeffs = lk_star_coefficients(p, series_t)?;
    let kernel = Kernel::new(c, t);
    let lx = x.ln();
    let terms = par_map(coeffs.len(), |m| {
        if m == 0 || coeffs[m] == Complex64::new(0.0, 0.0) {
            return Complex64::new(0.0, 0.0);
        }
        let l = lx - (m as f64).ln();
        coeffs[m] * (c * l).exp() * kernel.eval(l)
    });
    let integral = terms.iter().fold(Complex64::new(0.0, 0.0), |a, b| a + b);
    let two_pi_i = Complex64::new(0.0, 2.0 * PI);
    let perron_sum = two_pi_i * coeffs[1..=xf as usize].iter().fold(Complex64::new(0.0, 0.0), |a, b| a + b);
    let sum4pii = 2.0 * two_pi_i * shifted_sum(p, xf)?;
    // |∫| ≤ (X/m)^c · 4/(T ln(m/X)) for m > X
    let m = series_t as f64;
    let series_tail = if m > x {
        4.0 * x.powf(c) / (t * (m / x).ln()) * lk_star_tail(p, c, series_t)
    } else {
        f64::INFINITY
    };
    Ok(PerronDemo {
        line: c,
        integral,
        sum4pii,
        perron_sum,
        difference: integral - perron_sum,
        difference_4pii: integral - sum4pii,
        nodes: kernel.w.len(),
        series_tail,
    })
}
