//! Hurwitz zeta by Euler–Maclaurin, Dirichlet L-functions and their
//! completions `Λ(w,χ) = (N/π)^{w/2} Γ(w/2) L(w,χ)`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::chars::DirichletCharacter;
use crate::error::{Error, Result};
use crate::special::gamma::{is_gamma_pole, ln_gamma};

/// Exact Bernoulli numbers `B_2, B_4, …, B_32` as numerator/denominator.
pub const BERNOULLI: [(f64, f64); 16] = [
    (1.0, 6.0),
    (-1.0, 30.0),
    (1.0, 42.0),
    (-1.0, 30.0),
    (5.0, 66.0),
    (-691.0, 2730.0),
    (7.0, 6.0),
    (-3617.0, 510.0),
    (43867.0, 798.0),
    (-174611.0, 330.0),
    (854513.0, 138.0),
    (-236364091.0, 2730.0),
    (8553103.0, 6.0),
    (-23749461029.0, 870.0),
    (8615841276005.0, 14322.0),
    (-7709321041217.0, 510.0),
];

/// Distance from a pole below which an error is reported.
pub const POLE_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EulerMaclaurinSpec {
    /// Terms summed directly (`M ≥ 10`).
    pub shift: usize,
    /// Bernoulli correction order (even, `≤ 30`).
    pub correction_order: usize,
}

impl Default for EulerMaclaurinSpec {
    fn default() -> Self {
        EulerMaclaurinSpec {
            shift: 40,
            correction_order: 20,
        }
    }
}

impl EulerMaclaurinSpec {
    /// Shift chosen for the evaluation point: large enough for the remainder
    /// at `|s|`, small enough that the direct sum does not swamp the result
    /// when `ℜs < 0`.
    pub fn for_point(s: Complex64) -> Self {
        let m = ((s.norm() / 2.0).ceil() as usize + 8).max(10);
        EulerMaclaurinSpec {
            shift: m,
            correction_order: 20,
        }
    }

    pub fn new(shift: usize, correction_order: usize) -> Result<Self> {
        if shift < 10 || correction_order % 2 != 0 || correction_order > 30 {
            return Err(Error::InvalidParams(format!(
                "Euler–Maclaurin needs M ≥ 10 and even K ≤ 30, got M={shift}, K={correction_order}"
            )));
        }
        Ok(EulerMaclaurinSpec {
            shift,
            correction_order,
        })
    }
}

fn bernoulli(two_j: usize) -> f64 {
    let (n, d) = BERNOULLI[two_j / 2 - 1];
    n / d
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// `(e^w − 1)/w`.
fn expm1_over(w: Complex64) -> Complex64 {
    if w.norm() < 0.1 {
        let mut term = Complex64::new(1.0, 0.0);
        let mut sum = term;
        for k in 2..20 {
            term *= w / k as f64;
            sum += term;
        }
        sum
    } else {
        (w.exp() - 1.0) / w
    }
}

struct EmParts {
    value: Complex64,
    bound: f64,
}

// Euler–Maclaurin for ζ(s,a) with the integral term `x^{1−s}/(s−1)` either
// kept (`regular = false`) or replaced by `(x^{1−s} − 1)/(s−1)`.
fn euler_maclaurin(s: Complex64, a: f64, spec: &EulerMaclaurinSpec, regular: bool) -> EmParts {
    let m = spec.shift;
    let mut sum = Complex64::new(0.0, 0.0);
    for n in 0..m {
        sum += (-s * (n as f64 + a).ln()).exp();
    }
    let x = m as f64 + a;
    let lx = x.ln();
    let xs = (-s * lx).exp();
    if regular {
        sum += -lx * expm1_over((1.0 - s) * lx);
    } else {
        sum += xs * x / (s - 1.0);
    }
    sum += xs * 0.5;
    // term_j = B_{2j}/(2j)! · s(s+1)…(s+2j−2) · x^{−s−2j+1}
    let mut poch = s;
    let mut xpow = xs / x;
    let mut last = Complex64::new(0.0, 0.0);
    for j in 1..=spec.correction_order / 2 + 1 {
        let t = poch * xpow * (bernoulli(2 * j) / factorial(2 * j));
        if j <= spec.correction_order / 2 {
            sum += t;
        } else {
            last = t;
        }
        poch *= (s + (2 * j - 1) as f64) * (s + (2 * j) as f64);
        xpow /= x * x;
    }
    let k1 = (spec.correction_order + 1) as f64;
    let denom = s.re + k1;
    let bound = if denom > 0.0 {
        last.norm() * (s + k1).norm() / denom
    } else {
        f64::INFINITY
    };
    EmParts { value: sum, bound }
}

/// `ζ(s, a) = Σ_{n≥0} (n+a)^{−s}` continued to `s ≠ 1`.
pub fn hurwitz_zeta(s: Complex64, a: f64, spec: &EulerMaclaurinSpec) -> Result<Complex64> {
    Ok(hurwitz_zeta_with_bound(s, a, spec)?.0)
}

/// Value and the Euler–Maclaurin remainder bound.
pub fn hurwitz_zeta_with_bound(
    s: Complex64,
    a: f64,
    spec: &EulerMaclaurinSpec,
) -> Result<(Complex64, f64)> {
    if !(a > 0.0 && a <= 1.0) {
        return Err(Error::domain(format!("hurwitz_zeta needs a in (0,1], got {a}")));
    }
    if (s - 1.0).norm() < POLE_TOL {
        return Err(Error::pole("hurwitz_zeta", s));
    }
    let p = euler_maclaurin(s, a, spec, false);
    Ok((p.value, p.bound))
}

/// `ζ(s, a) − 1/(s − 1)`, finite at `s = 1`.
pub fn hurwitz_zeta_regular(s: Complex64, a: f64, spec: &EulerMaclaurinSpec) -> Complex64 {
    euler_maclaurin(s, a, spec, true).value
}

pub fn dirichlet_l(s: Complex64, chi: &DirichletCharacter) -> Result<Complex64> {
    dirichlet_l_with(s, chi, &EulerMaclaurinSpec::for_point(s))
}

/// `L(s,χ) = N^{−s} Σ_{a=1}^{N} χ(a) ζ(s, a/N)`.
pub fn dirichlet_l_with(
    s: Complex64,
    chi: &DirichletCharacter,
    spec: &EulerMaclaurinSpec,
) -> Result<Complex64> {
    let n = chi.modulus();
    if n == 1 {
        return hurwitz_zeta(s, 1.0, spec);
    }
    let nf = n as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    if chi.is_principal() {
        for a in 1..n {
            acc += hurwitz_zeta(s, a as f64 / nf, spec)?;
        }
    } else {
        // Σχ(a) = 0 cancels the pole parts exactly
        for a in 1..n {
            acc += chi.eval(a as i64) * hurwitz_zeta_regular(s, a as f64 / nf, spec);
        }
    }
    Ok(acc * (-s * nf.ln()).exp())
}

fn completion_factor(w: Complex64, n: u64) -> Result<Complex64> {
    let q = n as f64 / PI;
    Ok((w / 2.0 * q.ln() + ln_gamma(w / 2.0)?).exp())
}

fn completed_direct(w: Complex64, chi: &DirichletCharacter) -> Result<Complex64> {
    Ok(completion_factor(w, chi.modulus())? * dirichlet_l(w, chi)?)
}

const CIRCLE_RADIUS: f64 = 0.05;
const CIRCLE_POINTS: usize = 32;

// Cauchy integral over a small circle around `centre`; exact for the
// removable singularity of Γ(w/2)L(w,χ) there.
fn cauchy_circle(
    w: Complex64,
    centre: Complex64,
    chi: &DirichletCharacter,
) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..CIRCLE_POINTS {
        let e = Complex64::from_polar(
            CIRCLE_RADIUS,
            2.0 * PI * (j as f64 + 0.5) / CIRCLE_POINTS as f64,
        );
        let z = centre + e;
        acc += completed_direct(z, chi)? * e / (z - w);
    }
    Ok(acc / CIRCLE_POINTS as f64)
}

/// `Λ(w,χ)`; for `𝟙` this is `π^{−w/2} Γ(w/2) ζ(w)`.
pub fn completed_l(w: Complex64, chi: &DirichletCharacter) -> Result<Complex64> {
    if !chi.is_one() && !chi.is_even_primitive() {
        return Err(Error::Unsupported(format!(
            "completed L-function for {chi:?} (needs 𝟙 or an even nontrivial character)"
        )));
    }
    if chi.is_one() && ((w - 1.0).norm() < POLE_TOL || w.norm() < POLE_TOL) {
        return Err(Error::pole("completed zeta", w));
    }
    // removable points: w = −2m (m ≥ 1 for 𝟙, m ≥ 0 otherwise)
    let m = (-w.re / 2.0).round();
    let first = if chi.is_one() { 1.0 } else { 0.0 };
    if m >= first {
        let centre = Complex64::new(-2.0 * m, 0.0);
        if (w - centre).norm() < 1e-3 {
            return cauchy_circle(w, centre, chi);
        }
    }
    if is_gamma_pole(w / 2.0) {
        return Err(Error::pole("completed L", w));
    }
    completed_direct(w, chi)
}

/// `|Λ(s,χ) − τ(χ)/√N · Λ(1−s, χ̄)| / max(|Λ(s,χ)|, 1)`.
pub fn functional_equation_defect(s: Complex64, chi: &DirichletCharacter) -> Result<f64> {
    if !chi.is_even_primitive() {
        return Err(Error::Unsupported(
            "functional equation check needs an even nontrivial character".into(),
        ));
    }
    let lhs = completed_l(s, chi)?;
    let root = chi.gauss_sum() / (chi.modulus() as f64).sqrt();
    let rhs = root * completed_l(1.0 - s, &chi.conjugate())?;
    Ok((lhs - rhs).norm() / lhs.norm().max(1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    // Σ_{n<M}(n+a)^{−s} plus the integral tail and the half-term
    fn direct(s: Complex64, a: f64, terms: usize) -> Complex64 {
        let mut sum = Complex64::new(0.0, 0.0);
        for n in (0..terms).rev() {
            sum += (-s * (n as f64 + a).ln()).exp();
        }
        let x = terms as f64 + a;
        sum + (-s * x.ln()).exp() * x / (s - 1.0) + (-s * x.ln()).exp() * 0.5
    }

    #[test]
    fn bernoulli_table_matches_recurrence() {
        // Σ_{k=0}^{m} C(m+1,k) B_k = 0 in exact rationals
        type R = num_rational::Ratio<i128>;
        let mut b: Vec<R> = vec![R::from_integer(1)];
        for m in 1..=32usize {
            let mut acc = R::from_integer(0);
            let mut binom: i128 = 1;
            for (k, bk) in b.iter().enumerate() {
                acc += *bk * R::from_integer(binom);
                binom = binom * (m as i128 + 1 - k as i128) / (k as i128 + 1);
            }
            b.push(-acc / R::from_integer(m as i128 + 1));
        }
        for j in 1..=16 {
            let exact = b[2 * j];
            let (n, d) = BERNOULLI[j - 1];
            assert_eq!(*exact.numer() as f64, n, "B_{}", 2 * j);
            assert_eq!(*exact.denom() as f64, d, "B_{}", 2 * j);
        }
    }

    #[test]
    fn zeta_values() {
        let spec = EulerMaclaurinSpec::default();
        let z2 = hurwitz_zeta(c(2.0, 0.0), 1.0, &spec).unwrap();
        assert!((z2.re - PI * PI / 6.0).abs() < 1e-14);
        let oracle = direct(c(2.0, 0.0), 1.0, 1_000_000);
        assert!((z2 - oracle).norm() < 1e-12);
        let zh = hurwitz_zeta(c(2.0, 0.0), 0.5, &spec).unwrap();
        assert!((zh.re - PI * PI / 2.0).abs() < 1e-13);
        let z22 = hurwitz_zeta(c(2.0, 0.0), 1.0, &spec).unwrap() - 1.0;
        let peeled: Complex64 = (1..2_000_000).map(|n| c(1.0 / ((n as f64 + 1.0).powi(2)), 0.0)).sum::<Complex64>()
            + 1.0 / 2_000_001.0;
        assert!((z22 - peeled).norm() < 1e-12);
        assert!(matches!(hurwitz_zeta(c(1.0, 0.0), 0.3, &spec), Err(Error::Pole { .. })));
        let z0 = hurwitz_zeta(c(0.0, 0.0), 0.3, &spec).unwrap();
        assert!((z0.re - 0.2).abs() < 1e-14);
        let zm1 = hurwitz_zeta(c(-1.0, 0.0), 1.0, &spec).unwrap();
        assert!((zm1.re + 1.0 / 12.0).abs() < 1e-12);
    }

    #[test]
    fn euler_maclaurin_against_direct_sums() {
        let spec = EulerMaclaurinSpec::default();
        for i in 0..20 {
            let s = c(2.0 + 0.2 * i as f64, -6.0 + 0.7 * i as f64);
            let a = 0.05 + 0.045 * i as f64;
            let em = hurwitz_zeta(s, a, &spec).unwrap();
            let d = direct(s, a, 1_000_000);
            assert!((em - d).norm() < 1e-9, "s={s} a={a}");
        }
    }

    #[test]
    fn bound_shrinks_with_shift() {
        let s = c(0.7, 12.0);
        let mut prev = f64::INFINITY;
        for m in [10, 20, 40, 80] {
            let spec = EulerMaclaurinSpec::new(m, 20).unwrap();
            let (_, b) = hurwitz_zeta_with_bound(s, 0.4, &spec).unwrap();
            assert!(b <= prev);
            prev = b;
        }
        assert!(prev < 1e-20);
    }

    #[test]
    fn l_values() {
        let one = DirichletCharacter::trivial();
        let z2 = dirichlet_l(c(2.0, 0.0), &one).unwrap();
        assert!((z2.re - PI * PI / 6.0).abs() < 1e-14);
        let chi = DirichletCharacter::new(7, 2).unwrap();
        let l3 = dirichlet_l(c(3.0, 0.0), &chi).unwrap();
        let d: Complex64 = (1..=100_000i64)
            .map(|n| chi.eval(n) / (n as f64).powi(3))
            .sum();
        assert!((l3 - d).norm() < 1e-10);
        for n in [5u64, 7, 11, 13] {
            for chi in crate::chars::even_nontrivial_characters(n).unwrap() {
                assert!(dirichlet_l(c(0.0, 0.0), &chi).unwrap().norm() < 1e-13);
            }
        }
        let pr = DirichletCharacter::new(7, 0).unwrap();
        assert!(matches!(dirichlet_l(c(1.0, 0.0), &pr), Err(Error::Pole { .. })));
        assert!(dirichlet_l(c(1.0, 0.0), &chi).unwrap().norm() > 0.1);
    }

    #[test]
    fn completed_values() {
        let one = DirichletCharacter::trivial();
        let v = completed_l(c(2.0, 0.0), &one).unwrap();
        assert!((v.re - PI / 6.0).abs() < 1e-14);
        let chi = DirichletCharacter::new(7, 2).unwrap();
        let s = c(0.7, 3.0);
        let a = completed_l(s.conj(), &chi).unwrap();
        let b = completed_l(s, &chi.conjugate()).unwrap().conj();
        assert!((a - b).norm() < 1e-13 * a.norm());
        assert!(functional_equation_defect(c(0.3, 2.0), &chi).unwrap() < 1e-8);
        assert!(matches!(completed_l(c(1.0, 0.0), &one), Err(Error::Pole { .. })));
        assert!(matches!(completed_l(c(0.0, 0.0), &one), Err(Error::Pole { .. })));
        assert!(completed_l(c(-2.0, 0.0), &one).unwrap().norm().is_finite());
        assert!(completed_l(c(0.0, 0.0), &chi).unwrap().norm() > 1e-3);
    }

    #[test]
    fn removable_points_against_frozen_values() {
        // Λ(w, χ mod 11 index 4) at w = centre + 9e-4, arbitrary-precision reference
        let chi = DirichletCharacter::new(11, 4).unwrap();
        let frozen = [
            (0.0, c(1.753_459_061_249_519_4, 1.063_000_701_199_602_7)),
            (-2.0, c(3.675_347_247_574_767, 3.796_365_391_388_611)),
        ];
        for (centre, want) in frozen {
            let w = c(centre + 9e-4, 0.0);
            let got = completed_l(w, &chi).unwrap();
            assert!((got - want).norm() < 1e-9 * want.norm(), "{got} vs {want}");
            let at = completed_l(c(centre, 0.0), &chi).unwrap();
            assert!((at - want).norm() < 1e-2 * want.norm());
        }
    }

    #[test]
    fn defect_examples() {
        let chi11 = DirichletCharacter::new(11, 2).unwrap();
        assert!(functional_equation_defect(c(0.5, 0.0), &chi11).unwrap() < 1e-10);
        let chi7 = DirichletCharacter::new(7, 4).unwrap();
        assert!(functional_equation_defect(c(-0.5, 5.0), &chi7).unwrap() < 1e-8);
        let s = c(0.2, 1.3);
        let a = functional_equation_defect(s, &chi7).unwrap();
        let b = functional_equation_defect(1.0 - s, &chi7.conjugate()).unwrap();
        assert!((a - b).abs() < 1e-10);
        assert!(matches!(
            functional_equation_defect(s, &DirichletCharacter::trivial()),
            Err(Error::Unsupported(_))
        ));
    }
}
