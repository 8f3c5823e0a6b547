//! `L_k^(cont)`: trapezoid quadrature of the continuous-spectrum integral.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::{cpow, nonzero};
use crate::chars::DirichletCharacter;
use crate::divsum::{sigma, ConvolutionParams, TruncatedValue};
use crate::error::{Error, Result};
use crate::lfun::completed_l;
use crate::parallel::{ordered_sum, par_map};
use crate::special::gamma::{is_gamma_pole, ln_gamma};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Truncation `|ω| ≤ Ω` and trapezoid density of the `ω`-integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralTruncation {
    pub omega_max: f64,
    pub nodes_per_unit: u32,
}

impl SpectralTruncation {
    pub fn new(omega_max: f64, nodes_per_unit: u32) -> Result<Self> {
        if !(omega_max >= 0.0 && omega_max.is_finite()) || nodes_per_unit == 0 {
            return Err(Error::domain("Ω must be finite and ≥ 0, nodes_per_unit ≥ 1"));
        }
        Ok(SpectralTruncation { omega_max, nodes_per_unit })
    }

    /// `Ω = |ℑs| + 30`, at least 20 nodes per unit and more as `ℜs → 1/2`,
    /// where poles of `Γ((s−½±iω)/2)` approach the real `ω` axis.
    pub fn default_for(s: Complex64) -> Self {
        SpectralTruncation {
            omega_max: s.im.abs() + 30.0,
            nodes_per_unit: nodes_for_line(s.re),
        }
    }
}

pub(crate) fn nodes_for_line(sigma: f64) -> u32 {
    let d = sigma - 0.5;
    if !(d > 0.0) {
        return 20;
    }
    (4.0 / d).ceil().clamp(20.0, 4000.0) as u32
}

/// The `s`-independent part of the integrand sampled on `ω = j/n`,
/// `|j| ≤ J`.
#[derive(Debug, Clone)]
pub struct ContinuousSpectrum {
    params: ConvolutionParams,
    nodes_per_unit: u32,
    half: usize,
    weights: Vec<Complex64>,
}

/// `Λ(½+iω+u+v)Λ(½+iω−u+v,χ)Λ(½+iω+u−v,ψ)Λ(½+iω−u−v,χψ)
/// / (Λ(1+2iω,χψ)Λ(1−2iω,conj χψ))
/// · τ(conj χψ)/√N · σ_{−2iω}(k,χψ) k^{iω} / (2√π N^{(½−iω−u−v)/2})`.
pub fn spectral_weight(p: &ConvolutionParams, omega: f64) -> Result<Complex64> {
    let (u, v) = (p.u(), p.v());
    let io = Complex64::new(0.0, omega);
    let one = DirichletCharacter::trivial();
    let cp = p.chi_psi();
    let cpb = cp.conjugate();
    let nf = p.modulus() as f64;
    let kf = p.k() as f64;
    let h = 0.5 + io;
    let w1 = 1.0 + 2.0 * io;
    let w2 = 1.0 - 2.0 * io;
    let a = completed_l(h + u + v, &one)? * completed_l(h - u + v, p.chi())?
        / nonzero(completed_l(w1, cp)?, "Λ(1+2iω,χψ)", w1)?;
    let b = completed_l(h + u - v, p.psi())? * completed_l(h - u - v, cp)?
        / nonzero(completed_l(w2, &cpb)?, "Λ(1−2iω,conj χψ)", w2)?;
    let pref = cpb.gauss_sum() / nf.sqrt() * sigma(-2.0 * io, p.k() as i64, cp) * cpow(kf, io)
        / (2.0 * PI.sqrt() * cpow(nf, (0.5 - io - u - v) / 2.0));
    Ok(a * b * pref)
}

impl ContinuousSpectrum {
    /// Samples the weight on `[−Ω, Ω]`.
    pub fn new(p: &ConvolutionParams, nodes_per_unit: u32, omega_max: f64) -> Result<Self> {
        if nodes_per_unit == 0 || !(omega_max >= 0.0 && omega_max.is_finite()) {
            return Err(Error::domain("invalid spectral grid"));
        }
        let n = nodes_per_unit as f64;
        let half = (omega_max * n).round() as usize;
        let weights: Result<Vec<Complex64>> =
            par_map(2 * half + 1, |i| spectral_weight(p, (i as f64 - half as f64) / n))
                .into_iter()
                .collect();
        Ok(ContinuousSpectrum {
            params: p.clone(),
            nodes_per_unit,
            half,
            weights: weights?,
        })
    }

    pub fn nodes_per_unit(&self) -> u32 {
        self.nodes_per_unit
    }

    pub fn omega_max(&self) -> f64 {
        self.half as f64 / self.nodes_per_unit as f64
    }

    fn s_part(&self, s: Complex64) -> Result<Option<(Complex64, Complex64)>> {
        let (u, v) = (self.params.u(), self.params.v());
        let q = [(s + u + v) / 2.0, (s + u - v) / 2.0, (s - u + v) / 2.0, (s - u - v) / 2.0];
        if q.iter().any(|&z| is_gamma_pole(z)) {
            return Ok(None);
        }
        let mut c = ln_gamma(s)? - (s - 0.5) * (self.params.k() as f64).ln();
        for z in q {
            c -= ln_gamma(z)?;
        }
        Ok(Some((c, (s - 0.5) / 2.0)))
    }

    fn node(&self, j: i64, c: Complex64, h: Complex64) -> Result<Complex64> {
        let w = self.weights[(j + self.half as i64) as usize];
        if w == ZERO {
            return Ok(ZERO);
        }
        let omega = j as f64 / self.nodes_per_unit as f64;
        let io = Complex64::new(0.0, omega / 2.0);
        Ok(w * (c + ln_gamma(h + io)? + ln_gamma(h - io)?).exp())
    }

    /// Integrand at the node `ω = j/n`.
    pub fn integrand(&self, s: Complex64, j: i64) -> Result<Complex64> {
        match self.s_part(s)? {
            None => Ok(ZERO),
            Some((c, h)) => self.node(j, c, h),
        }
    }

    /// Trapezoid sum over `|ω| ≤ Ω` (`Ω` rounded to the grid, capped at the
    /// sampled range).
    pub fn integrate(&self, s: Complex64, omega: f64) -> Result<Complex64> {
        if !(s.re > 0.5) {
            return Err(Error::domain(format!("ℜs = {} must exceed 1/2", s.re)));
        }
        let n = self.nodes_per_unit as f64;
        let jm = ((omega * n).round() as usize).min(self.half);
        if jm == 0 {
            return Ok(ZERO);
        }
        let (c, h) = match self.s_part(s)? {
            None => return Ok(ZERO),
            Some(x) => x,
        };
        let jm = jm as i64;
        let vals: Vec<Result<Complex64>> = par_map((2 * jm + 1) as usize, |i| {
            let j = i as i64 - jm;
            let f = self.node(j, c, h)?;
            Ok(if j.abs() == jm { f * 0.5 } else { f })
        });
        let vals: Vec<Complex64> = vals.into_iter().collect::<Result<_>>()?;
        Ok(ordered_sum(0, vals.len(), |i| vals[i]) / n)
    }

    /// `(8/π)` times the largest `|integrand|` within one unit of `±Ω`, an
    /// envelope for the tail under `e^{−π(|ω|−|t|)/2}` decay.
    pub fn tail_envelope(&self, s: Complex64, omega: f64) -> Result<f64> {
        let n = self.nodes_per_unit as i64;
        let jm = ((omega * n as f64).round() as i64).min(self.half as i64);
        let (c, h) = match self.s_part(s)? {
            None => return Ok(0.0),
            Some(x) => x,
        };
        let mut m = 0.0f64;
        for j in (jm - n).max(0)..=jm {
            m = m.max(self.node(j, c, h)?.norm()).max(self.node(-j, c, h)?.norm());
        }
        Ok(8.0 / PI * m)
    }
}

/// `L_k^(cont)(s)` truncated at `|ω| ≤ Ω`.
///
/// The integral is recomputed to `2Ω`; a change larger than the tail
/// envelope is an accuracy error.
pub fn lk_cont(p: &ConvolutionParams, s: Complex64, tr: SpectralTruncation) -> Result<TruncatedValue> {
    if !(s.re > 0.5) {
        return Err(Error::domain(format!("ℜs = {} must exceed 1/2", s.re)));
    }
    if tr.omega_max == 0.0 {
        return Ok(TruncatedValue { value: ZERO, tail_bound: f64::INFINITY });
    }
    let cache = ContinuousSpectrum::new(p, tr.nodes_per_unit, 2.0 * tr.omega_max)?;
    lk_cont_cached(&cache, s, tr.omega_max)
}

pub(crate) fn lk_cont_cached(cache: &ContinuousSpectrum, s: Complex64, omega: f64) -> Result<TruncatedValue> {
    let a = cache.integrate(s, omega)?;
    let b = cache.integrate(s, 2.0 * omega)?;
    let tail = cache.tail_envelope(s, omega)?;
    let change = (b - a).norm();
    let floor = 1e-13 * a.norm().max(b.norm());
    if change > tail.max(floor) {
        return Err(Error::Accuracy {
            what: format!("L_k^(cont)({s}) under Ω → 2Ω"),
            achieved: change,
            required: tail.max(floor),
        });
    }
    Ok(TruncatedValue { value: a, tail_bound: tail })
}
