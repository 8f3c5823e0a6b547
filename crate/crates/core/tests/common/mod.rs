//! Brute-force oracles sharing nothing with the library beyond `Complex64`.
#![allow(dead_code)]

use num_complex::Complex64;
use std::f64::consts::TAU;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Smallest generator of (ℤ/p)^× found by exhaustive order computation.
pub fn generator(p: u64) -> u64 {
    (2..p)
        .find(|&g| {
            let mut x = 1;
            (1..p - 1).all(|_| {
                x = x * g % p;
                x != 1
            })
        })
        .unwrap_or(1)
}

/// χ(n) with χ(g) = e(index/(p−1)), logs by linear search.
pub fn chi(p: u64, index: u64, n: i64) -> Complex64 {
    if p == 1 {
        return c(1.0, 0.0);
    }
    let r = n.rem_euclid(p as i64) as u64;
    if r == 0 {
        return c(0.0, 0.0);
    }
    let g = generator(p);
    let mut x = 1;
    let mut j = 0;
    while x != r {
        x = x * g % p;
        j += 1;
    }
    Complex64::from_polar(1.0, TAU * ((index * j) % (p - 1)) as f64 / (p - 1) as f64)
}

/// σ_s(n, χ) by trial division, even in n, zero at 0.
pub fn sigma(s: Complex64, n: i64, p: u64, index: u64) -> Complex64 {
    let m = n.unsigned_abs();
    let mut acc = c(0.0, 0.0);
    for d in 1..=m {
        if m % d == 0 {
            acc += chi(p, index, d as i64) * Complex64::from(d as f64).powc(s);
        }
    }
    acc
}

/// Table of χ values over one period, for oracles that loop a lot.
pub fn chi_table(p: u64, index: u64) -> Vec<Complex64> {
    (0..p as i64).map(|n| chi(p, index, n)).collect()
}

/// σ_s(n, χ) for 0 ≤ n ≤ x by walking multiples, from a χ table.
pub fn sigma_table(s: Complex64, table: &[Complex64], x: usize) -> Vec<Complex64> {
    let p = table.len();
    let mut out = vec![c(0.0, 0.0); x + 1];
    for d in 1..=x {
        let w = table[d % p] * Complex64::from(d as f64).powc(s);
        let mut m = d;
        while m <= x {
            out[m] += w;
            m += d;
        }
    }
    out
}

/// Σ_{n≤X} σ_{2u}(n,χ)σ_{2v}(n−k,ψ)/n^{u+v}.
pub fn shifted_sum(p: u64, chi_i: u64, psi_i: u64, u: Complex64, v: Complex64, k: i64, x: i64) -> Complex64 {
    let a = sigma_table(2.0 * u, &chi_table(p, chi_i), x as usize);
    let b = sigma_table(2.0 * v, &chi_table(p, psi_i), (x + k) as usize);
    let mut acc = c(0.0, 0.0);
    for n in 1..=x {
        let m = (n - k).unsigned_abs() as usize;
        acc += a[n as usize] * b[m] / Complex64::from(n as f64).powc(u + v);
    }
    acc
}

/// ₂F₁ by its power series for |z| ≤ 0.8, otherwise after Pfaff's
/// transformation z → z/(z−1) (valid for z < 0).
pub fn hyp2f1(a: Complex64, b: Complex64, cc: Complex64, z: f64) -> Complex64 {
    if z.abs() > 0.8 {
        assert!(z < 0.0);
        let w = z / (z - 1.0);
        return Complex64::from(1.0 - z).powc(-a) * hyp2f1(a, cc - b, cc, w);
    }
    let mut term = c(1.0, 0.0);
    let mut sum = term;
    for j in 0..4000 {
        let jf = j as f64;
        term *= (a + jf) * (b + jf) / ((cc + jf) * (jf + 1.0)) * z;
        sum += term;
        if term.norm() < 1e-18 * sum.norm() {
            break;
        }
    }
    sum
}
