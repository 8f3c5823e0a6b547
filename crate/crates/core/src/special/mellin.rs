//! Mellin transforms `M[f](s) = ∫₀^∞ f(y) y^s dy/y`: a trapezoid evaluator
//! and the two closed forms for K-Bessel integrands.

use num_complex::Complex64;

use super::gamma::gamma_ratio;
use super::hyp2f1::hyp2f1;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transform {
    /// `y = e^x`; cutoffs are in `x`.
    Log,
    /// No substitution; cutoffs are in `y`.
    Identity,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub transform: Transform,
    pub step: f64,
    pub lower_cutoff: f64,
    pub upper_cutoff: f64,
    pub max_nodes: usize,
    /// Allowed relative gap between the step-`h` and step-`2h` sums.
    pub tolerance: f64,
}

impl QuadratureSpec {
    pub fn log(step: f64, lower: f64, upper: f64) -> Self {
        QuadratureSpec {
            transform: Transform::Log,
            step,
            lower_cutoff: lower,
            upper_cutoff: upper,
            max_nodes: 2_000_000,
            tolerance: 1e-8,
        }
    }

    /// Log-substituted range for integrands built from `K(c·y)` factors:
    /// `y^{margin}` decay at 0, exponential decay from `y ≈ 1/c` on.
    pub fn for_bessel(margin: f64, c: f64) -> Self {
        let lower = -(40.0 / margin.max(0.05)).min(700.0) - (c.ln()).max(0.0);
        let upper = (60.0 / c).ln().max(1.0);
        QuadratureSpec::log(0.05, lower, upper)
    }

    pub fn with_tolerance(mut self, tol: f64) -> Self {
        self.tolerance = tol;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.step > 0.0) || !(self.lower_cutoff < self.upper_cutoff) {
            return Err(Error::domain("quadrature needs step > 0 and lower < upper"));
        }
        if self.transform == Transform::Identity && self.lower_cutoff < 0.0 {
            return Err(Error::domain("identity transform needs lower cutoff ≥ 0"));
        }
        let n = (self.upper_cutoff - self.lower_cutoff) / self.step;
        if n > self.max_nodes as f64 {
            return Err(Error::Resource {
                what: "quadrature nodes".into(),
                required_bytes: (n as u64) * 16,
                limit_bytes: self.max_nodes as u64 * 16,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MellinQuadrature {
    pub value: Complex64,
    /// Same rule on every other node.
    pub coarse: Complex64,
    pub self_check: f64,
}

/// Trapezoid evaluation of `∫₀^∞ f(y) y^s dy/y` with a doubled-step self-check.
pub fn mellin_quadrature<F>(f: F, s: Complex64, spec: &QuadratureSpec) -> Result<MellinQuadrature>
where
    F: Fn(f64) -> Complex64,
{
    spec.validate()?;
    let n = ((spec.upper_cutoff - spec.lower_cutoff) / spec.step).ceil() as usize;
    let n = n + (n % 2);
    let h = (spec.upper_cutoff - spec.lower_cutoff) / n as f64;
    let mut fine = Complex64::new(0.0, 0.0);
    let mut coarse = Complex64::new(0.0, 0.0);
    for j in 0..=n {
        let x = spec.lower_cutoff + j as f64 * h;
        let g = match spec.transform {
            Transform::Log => f(x.exp()) * (s * x).exp(),
            Transform::Identity => {
                if x == 0.0 {
                    Complex64::new(0.0, 0.0)
                } else {
                    f(x) * ((s - 1.0) * x.ln()).exp()
                }
            }
        };
        let end = j == 0 || j == n;
        let w = if end { 0.5 } else { 1.0 };
        fine += g * w;
        if j % 2 == 0 {
            coarse += g * w;
        }
    }
    let value = fine * h;
    let coarse = coarse * (2.0 * h);
    let scale = value.norm().max(1e-14);
    let self_check = (value - coarse).norm() / scale;
    if !value.re.is_finite() || !value.im.is_finite() || self_check > spec.tolerance {
        return Err(Error::Accuracy {
            what: "mellin quadrature self-check".into(),
            achieved: self_check,
            required: spec.tolerance,
        });
    }
    Ok(MellinQuadrature {
        value,
        coarse,
        self_check,
    })
}

/// `∫₀^∞ K_u(ay) y^s dy/y = 2^{s−2} a^{−s} Γ((s+u)/2) Γ((s−u)/2)`.
pub fn bessel_mellin_closed(a: Complex64, s: Complex64, u: Complex64) -> Result<Complex64> {
    if !(a.re > 0.0) {
        return Err(Error::domain("bessel_mellin_closed needs ℜa > 0"));
    }
    if !(s.re > u.re.abs()) {
        return Err(Error::domain("bessel_mellin_closed needs ℜs > |ℜu|"));
    }
    let two = Complex64::new(2.0, 0.0);
    Ok(two.powc(s - 2.0) * (-s * a.ln()).exp() * gamma_ratio(&[(s + u) / 2.0, (s - u) / 2.0], &[])?)
}

/// `∫₀^∞ K_u(ay) K_v(by) y^s dy/y` for real `a, b > 0`.
pub fn bessel_product_mellin_closed(
    a: f64,
    b: f64,
    s: Complex64,
    u: Complex64,
    v: Complex64,
) -> Result<Complex64> {
    if !(a > 0.0 && b > 0.0) {
        return Err(Error::domain("bessel_product_mellin_closed needs a, b > 0"));
    }
    if !(s.re > u.re.abs() + v.re.abs()) {
        return Err(Error::domain(
            "bessel_product_mellin_closed needs ℜs > |ℜu| + |ℜv|",
        ));
    }
    let g = gamma_ratio(
        &[
            (s + u + v) / 2.0,
            (s + u - v) / 2.0,
            (s - u + v) / 2.0,
            (s - u - v) / 2.0,
        ],
        &[s],
    )?;
    let z = 1.0 - (b * b) / (a * a);
    let f = hyp2f1((s + u + v) / 2.0, (s - u + v) / 2.0, s, z)?;
    let pre = ((s - 3.0) * 2f64.ln() - s * a.ln() + v * (b / a).ln()).exp();
    Ok(pre * g * f)
}
