//! Twisted divisor sums `σ_s(n,χ) = Σ_{d|n} χ(d) d^s` and the series built
//! from them.

mod hecke;
mod params;
mod series;
mod sieve;

pub use hecke::{hecke_sequence, sigma_series_defect, sigma_series_sides, tempered_hecke_eigenvalues};
pub use params::ConvolutionParams;
pub(crate) use series::{dirichlet_sum, lk_star_tail};
pub use series::{
    lk_series, lk_star, lk_star_coefficients, ramanujan_defect, ramanujan_sides, shifted_sum,
    shifted_sum_grid,
};
pub use sieve::{
    sieve_limit, sieve_sigma, sieve_sigma_chunked, set_sieve_limit, SigmaTable, DEFAULT_SIEVE_LIMIT,
};

use num_complex::Complex64;

use crate::chars::DirichletCharacter;

/// A truncated sum and an envelope for the discarded tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncatedValue {
    pub value: Complex64,
    /// `f64::INFINITY` when the truncation is only formal.
    pub tail_bound: f64,
}

/// Divisor-growth exponent `ε` in `d(n) ≤ 4 n^ε` used by tail envelopes.
pub const DIVISOR_EPS: f64 = 0.1;
pub const DIVISOR_CONST: f64 = 4.0;

/// `C ∫_T^∞ x^{−α} dx` with `α` the net decay exponent of the terms.
pub(crate) fn power_tail(c: f64, alpha: f64, t: usize) -> f64 {
    if alpha <= 1.0 || t == 0 {
        return f64::INFINITY;
    }
    c * (t as f64).powf(1.0 - alpha) / (alpha - 1.0)
}

/// `d^s` for a positive integer `d`, principal branch.
#[inline]
pub(crate) fn int_pow(d: u64, s: Complex64) -> Complex64 {
    if d == 1 {
        return Complex64::new(1.0, 0.0);
    }
    (s * (d as f64).ln()).exp()
}

/// Divisors of `n > 0` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// `σ_s(n,χ)`, even in `n`, zero at `n = 0`.
pub fn sigma(s: Complex64, n: i64, chi: &DirichletCharacter) -> Complex64 {
    if n == 0 {
        return Complex64::new(0.0, 0.0);
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for d in divisors(n.unsigned_abs()) {
        let c = chi.eval(d as i64);
        if c != Complex64::new(0.0, 0.0) {
            acc += c * int_pow(d, s);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_examples() {
        let chi = DirichletCharacter::new(5, 1).unwrap();
        assert_eq!(sigma(Complex64::new(2.0, 0.0), 0, &chi), Complex64::new(0.0, 0.0));
        let v = sigma(Complex64::new(2.0, 0.0), 4, &chi);
        assert!((v - Complex64::new(-15.0, 4.0)).norm() < 1e-13);
        let chi7 = DirichletCharacter::new(7, 2).unwrap();
        let s = Complex64::new(1.3, -0.2);
        assert_eq!(sigma(s, 12, &chi7), sigma(s, -12, &chi7));
        assert_eq!(divisors(36), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
        assert_eq!(divisors(1), vec![1]);
    }
}
