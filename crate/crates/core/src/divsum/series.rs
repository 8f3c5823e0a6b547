use num_complex::Complex64;

use super::sieve::sieve_sigma;
use super::{int_pow, power_tail, ConvolutionParams, TruncatedValue, DIVISOR_CONST, DIVISOR_EPS};
use crate::chars::DirichletCharacter;
use crate::error::{Error, Result};
use crate::lfun::dirichlet_l;
use crate::parallel::{chunk_partials, ordered_sum, CHUNK};
use crate::special::hyp2f1;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// `Σ_{n=1}^X σ_{2u}(n,χ) σ_{2v}(n−k,ψ) / n^{u+v}`.
pub fn shifted_sum(p: &ConvolutionParams, x: u64) -> Result<Complex64> {
    Ok(shifted_sum_grid(p, &[x])?[0])
}

/// Partial sums at every `X` in `xs` from one pair of sieves.
///
/// Each entry is bit-identical to `shifted_sum` at that `X`.
pub fn shifted_sum_grid(p: &ConvolutionParams, xs: &[u64]) -> Result<Vec<Complex64>> {
    let Some(&x_max) = xs.iter().max() else {
        return Ok(Vec::new());
    };
    if xs.contains(&0) {
        return Err(Error::domain("shifted_sum needs X ≥ 1"));
    }
    let uv = p.u() + p.v();
    let left = sieve_sigma(2.0 * p.u(), p.chi(), x_max)?;
    let right = sieve_sigma(2.0 * p.v(), p.psi(), x_max.max(p.k()))?;
    let k = p.k() as i64;
    let term = |n: usize| {
        let n = n as i64;
        let b = right.get(n - k);
        if b == ZERO {
            return ZERO;
        }
        left.get(n) * b * int_pow(n as u64, -uv)
    };
    let partials = chunk_partials(1, x_max as usize + 1, term);
    let mut prefix = Vec::with_capacity(partials.len() + 1);
    let mut acc = ZERO;
    prefix.push(acc);
    for c in &partials {
        acc += c;
        prefix.push(acc);
    }
    Ok(xs
        .iter()
        .map(|&x| {
            let x = x as usize;
            let full = x / CHUNK;
            let start = 1 + full * CHUNK;
            if start > x {
                return prefix[full];
            }
            let mut tail = ZERO;
            for n in start..=x {
                tail += term(n);
            }
            prefix[full] + tail
        })
        .collect())
}

/// Truncated left side and the L-function right side of Ramanujan's
/// identity for `Σ σ_{u2}(n,χ) σ_{v2}(n,ψ) n^{−s}`.
pub fn ramanujan_sides(
    s: Complex64,
    u2: Complex64,
    v2: Complex64,
    chi: &DirichletCharacter,
    psi: &DirichletCharacter,
    t: u64,
) -> Result<(TruncatedValue, Complex64)> {
    let growth = u2.re.max(0.0) + v2.re.max(0.0);
    if !(s.re > 1.0 + growth) {
        return Err(Error::domain(format!(
            "ℜs = {} must exceed {} for absolute convergence",
            s.re,
            1.0 + growth
        )));
    }
    let chi_psi = chi.product(psi)?;
    let lhs = if t == 0 {
        ZERO
    } else {
        let a = sieve_sigma(u2, chi, t)?;
        let b = sieve_sigma(v2, psi, t)?;
        ordered_sum(1, t as usize + 1, |n| {
            a.get(n as i64) * b.get(n as i64) * int_pow(n as u64, -s)
        })
    };
    let one = DirichletCharacter::trivial();
    let rhs = dirichlet_l(s, &one)?
        * dirichlet_l(s - u2, chi)?
        * dirichlet_l(s - v2, psi)?
        * dirichlet_l(s - u2 - v2, &chi_psi)?
        / dirichlet_l(2.0 * s - u2 - v2, &chi_psi)?;
    let alpha = s.re - growth - 2.0 * DIVISOR_EPS;
    let tail = power_tail(DIVISOR_CONST * DIVISOR_CONST, alpha, t as usize);
    Ok((TruncatedValue { value: lhs, tail_bound: tail }, rhs))
}

pub fn ramanujan_defect(
    s: Complex64,
    u2: Complex64,
    v2: Complex64,
    chi: &DirichletCharacter,
    psi: &DirichletCharacter,
    t: u64,
) -> Result<f64> {
    let (lhs, rhs) = ramanujan_sides(s, u2, v2, chi, psi, t)?;
    Ok((lhs.value - rhs).norm())
}

/// Coefficients `c_m`, `0 ≤ m ≤ T`, with `L_k*(s) = Σ c_m m^{−s}` after
/// folding `n = ±m`.
pub fn lk_star_coefficients(p: &ConvolutionParams, t: u64) -> Result<Vec<Complex64>> {
    if t == 0 {
        return Ok(vec![ZERO]);
    }
    let k = p.k() as i64;
    let a = sieve_sigma(2.0 * p.u(), p.chi(), t)?;
    let b = sieve_sigma(2.0 * p.v(), p.psi(), t + p.k())?;
    let uv = p.u() + p.v();
    let mut c = crate::parallel::par_map(t as usize + 1, |m| {
        if m == 0 {
            return ZERO;
        }
        let m = m as i64;
        a.get(m) * (b.get(m - k) + b.get(m + k)) * int_pow(m as u64, -uv)
    });
    c[0] = ZERO;
    Ok(c)
}

/// `Σ_{m≥1} c_m m^{−s}` in fixed order.
pub(crate) fn dirichlet_sum(coeffs: &[Complex64], s: Complex64) -> Complex64 {
    ordered_sum(1, coeffs.len(), |m| {
        let c = coeffs[m];
        if c == ZERO {
            ZERO
        } else {
            c * int_pow(m as u64, -s)
        }
    })
}

/// Envelope for `Σ_{|n|>T}` of `|σ_{2u}(n,χ)σ_{2v}(n−k,ψ)| |n|^{−ℜ(s+u+v)}`,
/// valid for `T ≥ k` (`|n−k| ≤ 2|n|`).
pub(crate) fn lk_star_tail(p: &ConvolutionParams, sigma: f64, t: u64) -> f64 {
    if t < p.k() {
        return f64::INFINITY;
    }
    let gu = (2.0 * p.u().re).max(0.0);
    let gv = (2.0 * p.v().re).max(0.0);
    let alpha = sigma + (p.u() + p.v()).re - gu - gv - 2.0 * DIVISOR_EPS;
    let c = 2.0 * DIVISOR_CONST * DIVISOR_CONST * 2f64.powf(gv + DIVISOR_EPS);
    power_tail(c, alpha, t as usize)
}

/// `Σ_{0<|n|≤T, n≠k} σ_{2u}(n,χ) σ_{2v}(n−k,ψ) / |n|^{s+u+v}`.
///
/// The tail bound is infinite off the half-plane of absolute convergence.
pub fn lk_star(p: &ConvolutionParams, s: Complex64, t: u64) -> Result<TruncatedValue> {
    let coeffs = lk_star_coefficients(p, t)?;
    Ok(TruncatedValue {
        value: dirichlet_sum(&coeffs, s),
        tail_bound: lk_star_tail(p, s.re, t),
    })
}

/// `₂F₁` weight of the `n`-th term of `L_k`.
pub(crate) fn lk_weight(p: &ConvolutionParams, s: Complex64, n: i64) -> Result<Complex64> {
    let k = p.k() as f64;
    let nf = n as f64;
    let z = 2.0 * k / nf - (k * k) / (nf * nf);
    let a = (s + p.u() + p.v()) / 2.0;
    let b = (s + p.u() - p.v()) / 2.0;
    hyp2f1(a, b, s, z)
}

/// `L_k(s)`: the `L_k*` terms weighted by
/// `₂F₁((s+u+v)/2, (s+u−v)/2; s; 2k/n − k²/n²)`.
pub fn lk_series(p: &ConvolutionParams, s: Complex64, t: u64) -> Result<TruncatedValue> {
    if t == 0 {
        return Ok(TruncatedValue { value: ZERO, tail_bound: lk_star_tail(p, s.re, 0) });
    }
    let k = p.k() as i64;
    let a = sieve_sigma(2.0 * p.u(), p.chi(), t)?;
    let b = sieve_sigma(2.0 * p.v(), p.psi(), t + p.k())?;
    let exp = -(s + p.u() + p.v());
    let terms: Vec<Result<Complex64>> = crate::parallel::par_map(t as usize, |i| {
        let m = i as i64 + 1;
        let pw = int_pow(m as u64, exp) * a.get(m);
        let mut acc = ZERO;
        if m != k {
            acc += pw * b.get(m - k) * lk_weight(p, s, m)?;
        }
        acc += pw * b.get(m + k) * lk_weight(p, s, -m)?;
        Ok(acc)
    });
    let mut vals = Vec::with_capacity(terms.len() + 1);
    vals.push(ZERO);
    for r in terms {
        vals.push(r?);
    }
    let value = ordered_sum(1, vals.len(), |m| vals[m]);
    let mut weight_max: f64 = 1.0;
    let tt = t as i64;
    if tt > k {
        weight_max = weight_max
            .max(lk_weight(p, s, tt)?.norm())
            .max(lk_weight(p, s, -tt)?.norm());
    }
    Ok(TruncatedValue {
        value,
        tail_bound: 1.1 * weight_max * lk_star_tail(p, s.re, t),
    })
}
