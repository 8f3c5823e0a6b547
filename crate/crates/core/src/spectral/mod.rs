//! The main term and error exponent of the shifted convolution asymptotic,
//! the closed-form spectral pieces of `L_k`, the continuous-spectrum
//! integral, vertical-line growth fits and a Perron demonstration.

mod cont;
mod exponents;
mod fit;
mod perron;
mod pieces;

pub use cont::{lk_cont, spectral_weight, ContinuousSpectrum, SpectralTruncation};
pub use exponents::{theorem_exponents, theorem_exponents_exact, ExactExponents, Exponents};
pub use fit::{
    fit_loglog, geometric_grid, residual_fit, residual_fit_values, vertical_growth_fit,
    vertical_growth_samples, vertical_growth_values, FitResult, GrowthComponent,
};
pub use perron::{perron_demo, perron_kernel, PerronDemo, PERRON_STEP};
pub use pieces::{lk_r, lk_r_residue, lk_r_unsimplified, lk_v, lk_v_terms};

use num_complex::Complex64;

use crate::divsum::{sigma, ConvolutionParams};
use crate::error::{Error, Result};
use crate::lfun::dirichlet_l;

pub(crate) fn cpow(base: f64, e: Complex64) -> Complex64 {
    Complex64::from(base).powc(e)
}

pub(crate) fn nonzero(x: Complex64, what: &str, at: Complex64) -> Result<Complex64> {
    if !(x.norm() > 1e-300) {
        return Err(Error::pole(format!("1/{what}"), at));
    }
    Ok(x)
}

/// Coefficients of the two main-term powers:
/// `lower · X^{1−u−v}/(1−u−v) + upper · X^{1+u+v}/(1+u+v)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MainTermCoefficients {
    pub lower: Complex64,
    pub upper: Complex64,
}

pub fn main_term_coefficients(p: &ConvolutionParams) -> Result<MainTermCoefficients> {
    let (u, v) = (p.u(), p.v());
    let uv = u + v;
    let k = p.k() as i64;
    let chi_psi = p.chi_psi();
    let cb = p.chi().conjugate();
    let pb = p.psi().conjugate();
    let cpb = chi_psi.conjugate();

    let w = 2.0 - 2.0 * uv;
    let lower = dirichlet_l(1.0 - 2.0 * u, p.chi())? * dirichlet_l(1.0 - 2.0 * v, p.psi())?
        / nonzero(dirichlet_l(w, chi_psi)?, "L(2−2u−2v,χψ)", w)?
        * sigma(-1.0 + 2.0 * uv, k, chi_psi);

    let w = 2.0 + 2.0 * uv;
    let upper = cpb.gauss_sum() / (cb.gauss_sum() * pb.gauss_sum())
        * dirichlet_l(1.0 + 2.0 * u, &cb)?
        * dirichlet_l(1.0 + 2.0 * v, &pb)?
        / nonzero(dirichlet_l(w, &cpb)?, "L(2+2u+2v, conj χψ)", w)?
        * sigma(1.0 + 2.0 * uv, k, chi_psi)
        / cpow(k as f64, 1.0 + 2.0 * uv);
    Ok(MainTermCoefficients { lower, upper })
}

/// The two main-term powers of `Σ_{n≤X} σ_{2u}(n,χ)σ_{2v}(n−k,ψ)/n^{u+v}`.
pub fn main_term(p: &ConvolutionParams, x: f64) -> Result<Complex64> {
    if !(x > 0.0) {
        return Err(Error::domain(format!("X = {x} must be positive")));
    }
    let uv = p.u() + p.v();
    for e in [1.0 - uv, 1.0 + uv] {
        if e.norm() < 1e-12 {
            return Err(Error::pole("X^e/e", e));
        }
    }
    let c = main_term_coefficients(p)?;
    Ok(c.lower * cpow(x, 1.0 - uv) / (1.0 - uv) + c.upper * cpow(x, 1.0 + uv) / (1.0 + uv))
}
