use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::sieve::sieve_sigma;
use super::int_pow;
use crate::chars::DirichletCharacter;
use crate::error::{Error, Result};
use crate::parallel::ordered_sum;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

fn smallest_prime_factors(x: usize) -> Vec<u32> {
    let mut spf = vec![0u32; x + 1];
    for i in 2..=x {
        if spf[i] == 0 {
            let mut j = i;
            while j <= x {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
    }
    spf
}

/// Random `a(p)` for primes `p ≤ X` obeying the Ramanujan bound: for
/// `p ∤ N`, `a(p) = α + χ(p)ᾱ` with `|α| = 1`, so `|a(p)| ≤ 2`; for `p = N`,
/// `|a(p)| ≤ 1`.
pub fn tempered_hecke_eigenvalues(
    chi: &DirichletCharacter,
    x: u64,
    seed: u64,
) -> BTreeMap<u64, Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spf = smallest_prime_factors(x as usize);
    let mut out = BTreeMap::new();
    for p in 2..=x as usize {
        if spf[p] as usize != p {
            continue;
        }
        let c = chi.eval(p as i64);
        let a = if c == ZERO {
            Complex64::from_polar(rng.gen::<f64>().sqrt(), std::f64::consts::TAU * rng.gen::<f64>())
        } else {
            let alpha = Complex64::from_polar(1.0, std::f64::consts::TAU * rng.gen::<f64>());
            alpha + c * alpha.conj()
        };
        out.insert(p as u64, a);
    }
    out
}

/// `a(n)` for `0 ≤ n ≤ X` from prime values via the Hecke relations with
/// nebentypus `χ`; `a(0) = 0`, `a(1) = 1`.
pub fn hecke_sequence(
    chi: &DirichletCharacter,
    a_p: &BTreeMap<u64, Complex64>,
    x: u64,
) -> Result<Vec<Complex64>> {
    let x = x as usize;
    let spf = smallest_prime_factors(x);
    let mut a = vec![ZERO; x + 1];
    if x >= 1 {
        a[1] = Complex64::new(1.0, 0.0);
    }
    for n in 2..=x {
        let p = spf[n] as usize;
        let mut m = n;
        let mut pe = 1;
        while m % p == 0 {
            m /= p;
            pe *= p;
        }
        a[n] = if m == 1 {
            let ap = *a_p.get(&(p as u64)).ok_or(Error::MissingPrime(p as u64))?;
            if pe == p {
                ap
            } else {
                ap * a[n / p] - chi.eval(p as i64) * a[n / (p * p)]
            }
        } else {
            a[pe] * a[m]
        };
    }
    Ok(a)
}

/// `Σ_{n≤T} a(n) w(n) n^{−s}`.
fn truncated(a: &[Complex64], t: usize, s: Complex64, w: impl Fn(usize) -> Complex64 + Sync) -> Complex64 {
    ordered_sum(1, t + 1, |n| {
        let c = a[n] * w(n);
        if c == ZERO {
            ZERO
        } else {
            c * int_pow(n as u64, -s)
        }
    })
}

/// Both sides of `Σ σ_v(n,ψ)a(n)n^{−s} = L(s−v,ψ×f)L(s,f)/L(2s−v,χψ)`,
/// each L-series truncated at `T`.
pub fn sigma_series_sides(
    s: Complex64,
    v2: Complex64,
    psi: &DirichletCharacter,
    chi: &DirichletCharacter,
    a: &[Complex64],
    t: u64,
) -> Result<(Complex64, Complex64)> {
    if s.re < 3.0 {
        return Err(Error::domain(format!("ℜs = {} must be ≥ 3", s.re)));
    }
    if v2.re.abs() > 1.0 {
        return Err(Error::domain("|ℜv| must be ≤ 1"));
    }
    let t = t as usize;
    if a.len() <= t {
        return Err(Error::domain(format!(
            "Hecke sequence has {} terms, need {}",
            a.len().saturating_sub(1),
            t
        )));
    }
    if t == 0 {
        return Ok((ZERO, ZERO));
    }
    let chi_psi = chi.product(psi)?;
    let sig = sieve_sigma(v2, psi, t as u64)?;
    let lhs = truncated(a, t, s, |n| sig.get(n as i64));
    let one = vec![Complex64::new(1.0, 0.0); t + 1];
    let l_twist = truncated(a, t, s - v2, |n| psi.eval(n as i64));
    let l_f = truncated(a, t, s, |_| Complex64::new(1.0, 0.0));
    let l_den = truncated(&one, t, 2.0 * s - v2, |n| chi_psi.eval(n as i64));
    Ok((lhs, l_twist * l_f / l_den))
}

pub fn sigma_series_defect(
    s: Complex64,
    v2: Complex64,
    psi: &DirichletCharacter,
    chi: &DirichletCharacter,
    a: &[Complex64],
    t: u64,
) -> Result<f64> {
    let (l, r) = sigma_series_sides(s, v2, psi, chi, a, t)?;
    Ok((l - r).norm())
}
