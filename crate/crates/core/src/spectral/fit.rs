//! Log–log regression: residual exponents in `X` and growth exponents in `t`.

use num_complex::Complex64;

use super::cont::{lk_cont_cached, nodes_for_line, ContinuousSpectrum};
use super::{lk_r, lk_v, main_term};
use crate::divsum::{dirichlet_sum, lk_star_coefficients, shifted_sum_grid, ConvolutionParams};
use crate::error::{Error, Result};
use crate::parallel::par_map;

/// Least-squares line through `(ln x, ln |f|)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FitResult {
    pub slope: f64,
    pub intercept: f64,
    pub rms_residual: f64,
    pub points: Vec<(f64, f64)>,
    /// Abscissae (not logged) of nodes left out of the fit.
    pub dropped: Vec<f64>,
}

impl FitResult {
    /// Refit of the stored points.
    pub fn refit(&self) -> Result<FitResult> {
        let mut f = fit_loglog(self.points.clone())?;
        f.dropped = self.dropped.clone();
        Ok(f)
    }
}

/// Ordinary least squares on points already in log coordinates.
pub fn fit_loglog(points: Vec<(f64, f64)>) -> Result<FitResult> {
    if points.len() < 3 {
        return Err(Error::domain(format!("fit needs ≥ 3 points, got {}", points.len())));
    }
    if points.iter().any(|(a, b)| !a.is_finite() || !b.is_finite()) {
        return Err(Error::domain("non-finite point in fit"));
    }
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if !(sxx > 0.0) {
        return Err(Error::domain("fit abscissae are all equal"));
    }
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let rss: f64 = points.iter().map(|p| (p.1 - intercept - slope * p.0).powi(2)).sum();
    Ok(FitResult {
        slope,
        intercept,
        rms_residual: (rss / n).sqrt(),
        points,
        dropped: Vec::new(),
    })
}

/// Fit of `ln r` against `ln X`; zero residuals are dropped.
pub fn residual_fit_values(xs: &[f64], residuals: &[f64]) -> Result<FitResult> {
    if xs.len() != residuals.len() {
        return Err(Error::domain("grid and residual lengths differ"));
    }
    let mut points = Vec::new();
    let mut dropped = Vec::new();
    for (&x, &r) in xs.iter().zip(residuals) {
        if r > 0.0 && r.is_finite() {
            points.push((x.ln(), r.ln()));
        } else {
            dropped.push(x);
        }
    }
    if points.len() < 3 {
        return Err(Error::domain(format!(
            "only {} nonzero residuals survive (need 3)",
            points.len()
        )));
    }
    let mut f = fit_loglog(points)?;
    f.dropped = dropped;
    Ok(f)
}

/// Slope of `ln |shifted_sum(X) − main_term(X)|` against `ln X`.
///
/// The grid must be increasing with at least 4 points spanning two decades.
pub fn residual_fit(p: &ConvolutionParams, x_grid: &[u64]) -> Result<FitResult> {
    if x_grid.len() < 4 {
        return Err(Error::domain(format!("X grid needs ≥ 4 points, got {}", x_grid.len())));
    }
    if x_grid[0] == 0 || x_grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::domain("X grid must be positive and strictly increasing"));
    }
    let (lo, hi) = (x_grid[0] as f64, *x_grid.last().unwrap() as f64);
    if hi / lo < 100.0 {
        return Err(Error::domain(format!("X grid spans {:.2} decades, need 2", (hi / lo).log10())));
    }
    let sums = shifted_sum_grid(p, x_grid)?;
    let mut xs = Vec::with_capacity(x_grid.len());
    let mut res = Vec::with_capacity(x_grid.len());
    for (&x, s) in x_grid.iter().zip(sums) {
        let m = main_term(p, x as f64)?;
        let r = (s - m).norm();
        let scale = s.norm().max(m.norm());
        xs.push(x as f64);
        res.push(if r <= 4.0 * f64::EPSILON * scale { 0.0 } else { r });
    }
    residual_fit_values(&xs, &res)
}

/// Which piece of `L_k` a growth scan evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrowthComponent {
    R,
    V,
    Cont,
    /// `L_k*` truncated at `terms` coefficients.
    LkStar { terms: u64 },
}

impl GrowthComponent {
    pub fn name(&self) -> &'static str {
        match self {
            GrowthComponent::R => "R",
            GrowthComponent::V => "V",
            GrowthComponent::Cont => "cont",
            GrowthComponent::LkStar { .. } => "lk_star",
        }
    }

    /// Default `(σ, t_min, t_max)` of the growth scan.
    pub fn default_line(&self) -> (f64, f64, f64) {
        match self {
            GrowthComponent::R => (0.55, 5.0, 80.0),
            GrowthComponent::V => (1.6, 10.0, 160.0),
            GrowthComponent::Cont => (0.55, 5.0, 40.0),
            GrowthComponent::LkStar { .. } => (1.6, 5.0, 80.0),
        }
    }
}

/// Distance from `z` to the nearest nonpositive integer.
fn gamma_pole_distance(z: Complex64) -> f64 {
    let m = z.re.round().min(0.0);
    Complex64::new(z.re - m, z.im).norm()
}

// Known poles of the closed forms as functions of s.
fn near_pole(component: GrowthComponent, p: &ConvolutionParams, s: Complex64, tol: f64) -> bool {
    let uv = p.u() + p.v();
    let args: Vec<Complex64> = match component {
        GrowthComponent::R => vec![(s - 1.0 - uv) / 2.0, (s - 1.0 + uv) / 2.0, s / 2.0],
        GrowthComponent::V => vec![s / 2.0],
        _ => vec![],
    };
    // z = (s − a)/2 has its poles 2·dist away in s
    args.iter().any(|&z| 2.0 * gamma_pole_distance(z) < tol)
}

/// Fit of `ln |f(σ+it)|` against `ln t`; pole errors and zeros drop the
/// node, and more than 30% dropped is an error.
pub fn vertical_growth_values(ts: &[f64], values: &[Result<Complex64>]) -> Result<FitResult> {
    if ts.len() != values.len() {
        return Err(Error::domain("grid and value lengths differ"));
    }
    let mut points = Vec::new();
    let mut dropped = Vec::new();
    for (&t, v) in ts.iter().zip(values) {
        match v {
            Ok(z) if z.norm() > 0.0 && z.norm().is_finite() => points.push((t.abs().ln(), z.norm().ln())),
            Ok(_) | Err(Error::Pole { .. }) => dropped.push(t),
            Err(e) => return Err(e.clone()),
        }
    }
    if dropped.len() as f64 > 0.3 * ts.len() as f64 {
        return Err(Error::domain(format!(
            "{} of {} nodes dropped (limit 30%)",
            dropped.len(),
            ts.len()
        )));
    }
    let mut f = fit_loglog(points)?;
    f.dropped = dropped;
    Ok(f)
}

/// Values of `component` at `σ + it` over `t_grid`.
pub fn vertical_growth_samples(
    component: GrowthComponent,
    p: &ConvolutionParams,
    sigma: f64,
    t_grid: &[f64],
) -> Result<Vec<Result<Complex64>>> {
    if t_grid.iter().any(|t| !(t.abs() > 0.0) || !t.is_finite()) {
        return Err(Error::domain("t grid must be finite and avoid 0"));
    }
    let at = |t: f64| Complex64::new(sigma, t);
    let guard = |s: Complex64, f: &dyn Fn(Complex64) -> Result<Complex64>| {
        if near_pole(component, p, s, 1e-3) {
            Err(Error::pole(format!("{} near pole", component.name()), s))
        } else {
            f(s)
        }
    };
    let vals = match component {
        GrowthComponent::R => par_map(t_grid.len(), |i| guard(at(t_grid[i]), &|s| lk_r(p, s))),
        GrowthComponent::V => par_map(t_grid.len(), |i| guard(at(t_grid[i]), &|s| lk_v(p, s))),
        GrowthComponent::Cont => {
            if !(sigma > 0.5) {
                return Err(Error::domain("L_k^(cont) needs σ > 1/2"));
            }
            let tmax = t_grid.iter().fold(0.0f64, |a, t| a.max(t.abs()));
            let cache = ContinuousSpectrum::new(p, nodes_for_line(sigma), 2.0 * (tmax + 30.0))?;
            t_grid
                .iter()
                .map(|&t| lk_cont_cached(&cache, at(t), t.abs() + 30.0).map(|v| v.value))
                .collect()
        }
        GrowthComponent::LkStar { terms } => {
            let c = lk_star_coefficients(p, terms)?;
            t_grid.iter().map(|&t| Ok(dirichlet_sum(&c, at(t)))).collect()
        }
    };
    Ok(vals)
}

/// Growth exponent of `component` on the line `ℜs = σ`.
pub fn vertical_growth_fit(
    component: GrowthComponent,
    p: &ConvolutionParams,
    sigma: f64,
    t_grid: &[f64],
) -> Result<FitResult> {
    let vals = vertical_growth_samples(component, p, sigma, t_grid)?;
    vertical_growth_values(t_grid, &vals)
}

/// `count` points from `lo` to `hi` in geometric progression.
pub fn geometric_grid(lo: f64, hi: f64, count: usize) -> Result<Vec<f64>> {
    if !(lo > 0.0 && hi >= lo) || count < 2 {
        return Err(Error::domain("geometric grid needs 0 < lo ≤ hi and count ≥ 2"));
    }
    let r = (hi / lo).ln() / (count - 1) as f64;
    let mut g: Vec<f64> = (0..count).map(|i| lo * (r * i as f64).exp()).collect();
    g[count - 1] = hi;
    Ok(g)
}
