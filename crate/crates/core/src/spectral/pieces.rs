//! `L_k^(R)` and `L_k^(V)`.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::cpow;
use crate::divsum::{sigma, ConvolutionParams};
use crate::eisenstein::r_constants;
use crate::error::{Error, Result};
use crate::lfun::completed_l;
use crate::special::gamma::is_gamma_pole;
use crate::special::{gamma, gamma_ratio};

/// The four arguments `(s±u±v)/2` in the order `++, +−, −+, −−`.
fn quartet(p: &ConvolutionParams, s: Complex64) -> [Complex64; 4] {
    let (u, v) = (p.u(), p.v());
    [(s + u + v) / 2.0, (s + u - v) / 2.0, (s - u + v) / 2.0, (s - u - v) / 2.0]
}

/// `Π Γ(num)/Π Γ(den)` with a pole of any numerator factor reported by name.
fn named_ratio(num: &[(Complex64, &str)], den: &[Complex64], s: Complex64) -> Result<Complex64> {
    for (z, name) in num {
        if is_gamma_pole(*z) {
            return Err(Error::pole(name.to_string(), s));
        }
    }
    let num: Vec<Complex64> = num.iter().map(|(z, _)| *z).collect();
    gamma_ratio(&num, den)
}

fn lk_r_impl(p: &ConvolutionParams, s: Complex64, simplified: bool) -> Result<Complex64> {
    let uv = p.u() + p.v();
    let kf = p.k() as f64;
    let k = p.k() as i64;
    let (a, b) = r_constants(p)?;
    let q = quartet(p, s);
    let sp = PI.sqrt();
    let g1 = if simplified {
        named_ratio(
            &[((s - 1.0 - uv) / 2.0, "Γ((s−1−u−v)/2)"), (s, "Γ(s)")],
            &[q[1], q[2], q[3]],
            s,
        )?
    } else {
        named_ratio(
            &[(q[0], "Γ((s+u+v)/2)"), ((s - 1.0 - uv) / 2.0, "Γ((s−1−u−v)/2)"), (s, "Γ(s)")],
            &q,
            s,
        )?
    };
    let g2 = if simplified {
        named_ratio(
            &[((s - 1.0 + uv) / 2.0, "Γ((s−1+u+v)/2)"), (s, "Γ(s)")],
            &[q[0], q[1], q[2]],
            s,
        )?
    } else {
        named_ratio(
            &[(q[3], "Γ((s−u−v)/2)"), ((s - 1.0 + uv) / 2.0, "Γ((s−1+u+v)/2)"), (s, "Γ(s)")],
            &q,
            s,
        )?
    };
    let t1 = a * sp * sigma(2.0 * uv + 1.0, k, p.chi_psi()) / cpow(kf, s + uv) * g1;
    let t2 = b * sp * sigma(2.0 * uv - 1.0, k, p.chi_psi()) / cpow(kf, s - 1.0 + uv) * g2;
    Ok(t1 + t2)
}

/// `L_k^(R)(s)`, the contribution of the regularizer, with the common
/// Γ factors cancelled.
pub fn lk_r(p: &ConvolutionParams, s: Complex64) -> Result<Complex64> {
    lk_r_impl(p, s, true)
}

/// [`lk_r`] evaluated as displayed, each Γ factor kept.
pub fn lk_r_unsimplified(p: &ConvolutionParams, s: Complex64) -> Result<Complex64> {
    lk_r_impl(p, s, false)
}

/// Residue of `L_k^(R)` at `s = 1+u+v`, from the simple pole of
/// `Γ((s−1−u−v)/2)` (residue 2 in `s`).
///
/// `= 2A σ_{1+2u+2v}(k,χψ) Γ(1+u+v) / (k^{1+2u+2v} Γ(½+u) Γ(½+v))`.
pub fn lk_r_residue(p: &ConvolutionParams) -> Result<Complex64> {
    let (u, v) = (p.u(), p.v());
    let uv = u + v;
    let (a, _) = r_constants(p)?;
    let kf = p.k() as f64;
    let g = gamma_ratio(&[1.0 + uv], &[0.5 + u, 0.5 + v])?;
    Ok(2.0 * a * sigma(1.0 + 2.0 * uv, p.k() as i64, p.chi_psi()) / cpow(kf, 1.0 + 2.0 * uv) * g)
}

/// The two terms of `L_k^(V)(s)`; swapping `(u,χ) ↔ (v,ψ)` exchanges them.
pub fn lk_v_terms(p: &ConvolutionParams, s: Complex64) -> Result<(Complex64, Complex64)> {
    let (u, v) = (p.u(), p.v());
    let nf = p.modulus() as f64;
    let kf = p.k() as f64;
    let k = p.k() as i64;
    let q = quartet(p, s);
    let gs = s_gamma(s)?;
    let term = |chi: &crate::chars::DirichletCharacter,
                psi: &crate::chars::DirichletCharacter,
                a: Complex64,
                b: Complex64,
                den: [Complex64; 2]|
     -> Result<Complex64> {
        let lam = completed_l(1.0 + 2.0 * a, &chi.conjugate())?;
        let g = gamma_ratio(&[], &den)? * gs;
        Ok(-chi.gauss_sum() / nf.sqrt() * lam * cpow(nf, a) * sigma(2.0 * b, k, psi)
            / (cpow(PI, a) * cpow(kf, s + u + v))
            * g)
    };
    let t1 = term(p.chi(), p.psi(), u, v, [q[2], q[3]])?;
    let t2 = term(p.psi(), p.chi(), v, u, [q[1], q[3]])?;
    Ok((t1, t2))
}

fn s_gamma(s: Complex64) -> Result<Complex64> {
    if is_gamma_pole(s) {
        return Err(Error::pole("Γ(s)", s));
    }
    gamma(s)
}

/// `L_k^(V)(s)`, the contribution of the polynomial part of `V`'s constant
/// term.
pub fn lk_v(p: &ConvolutionParams, s: Complex64) -> Result<Complex64> {
    let (a, b) = lk_v_terms(p, s)?;
    Ok(a + b)
}
