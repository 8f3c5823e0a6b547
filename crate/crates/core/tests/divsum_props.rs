mod common;

use common::c;
use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use shiftconv::chars::DirichletCharacter;
use shiftconv::divsum::{
    hecke_sequence, lk_series, lk_star, ramanujan_sides, shifted_sum, sieve_sigma, sieve_sigma_chunked, sigma,
    sigma_series_defect, tempered_hecke_eigenvalues, ConvolutionParams, SigmaTable,
};
use shiftconv::parallel::with_threads;

fn params(u: Complex64, v: Complex64) -> ConvolutionParams {
    ConvolutionParams::new(7, 2, 2, u, v, 1, 0.1).unwrap()
}

#[test]
fn sigma_examples() {
    let chi = DirichletCharacter::new(7, 2).unwrap();
    assert_eq!(sigma(c(0.3, 0.1), 0, &chi), c(0.0, 0.0));
    let chi5 = DirichletCharacter::new(5, 1).unwrap();
    assert!((sigma(c(2.0, 0.0), 4, &chi5) - c(-15.0, 4.0)).norm() < 1e-12);
    let s = c(1.3, -0.2);
    assert_eq!(sigma(s, -12, &chi), sigma(s, 12, &chi));
    assert!((sigma(s, 12, &chi) - common::sigma(s, 12, 7, 2)).norm() < 1e-12);
}

#[test]
fn sieve_matches_enumeration() {
    let sets = [(7u64, 2u64, c(0.2, 0.1)), (7, 4, c(-0.3, 0.5)), (11, 2, c(0.8, 0.0)), (13, 6, c(0.0, -2.0))];
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for (p, idx, s) in sets {
        let chi = DirichletCharacter::new(p, idx).unwrap();
        let t = sieve_sigma(s, &chi, 5_000).unwrap();
        assert_eq!(t.get(1), c(1.0, 0.0));
        for _ in 0..100 {
            let n = rng.gen_range(1..=5_000i64);
            let want = common::sigma(s, n, p, idx);
            assert!((t.get(n) - want).norm() <= 1e-12 * want.norm().max(1.0), "p={p} idx={idx} n={n}");
        }
    }
}

#[test]
fn sieve_chunking_is_bit_identical() {
    let chi = DirichletCharacter::new(7, 2).unwrap();
    let s = c(0.2, 0.14);
    let a = sieve_sigma_chunked(s, &chi, 200_000, 1 << 16).unwrap();
    for chunk in [1000, 4096, 200_001] {
        let b = sieve_sigma_chunked(s, &chi, 200_000, chunk).unwrap();
        assert!(a.values() == b.values(), "chunk {chunk}");
    }
}

#[test]
fn shifted_sum_small_cases() {
    let p = ConvolutionParams::default_config();
    assert_eq!(shifted_sum(&p, 1).unwrap(), c(0.0, 0.0));
    let (u, v) = (c(0.1, 0.0), c(0.1, 0.0));
    let got = shifted_sum(&params(u, v), 3).unwrap();
    let want = common::shifted_sum(7, 2, 2, u, v, 1, 3);
    assert!((got - want).norm() <= 1e-12 * want.norm());
}

#[test]
fn shifted_sum_against_oracle() {
    // frozen from the divisor-enumeration oracle, cross-checked at 30 digits
    let frozen = c(94.1390140876707288, -335.440991491218166);
    let p = ConvolutionParams::default_config();
    let got = shifted_sum(&p, 1000).unwrap();
    let oracle = common::shifted_sum(7, 2, 2, c(0.0, 0.10), c(0.0, 0.07), 1, 1000);
    assert!((oracle - frozen).norm() <= 1e-12 * frozen.norm());
    assert!((got - frozen).norm() <= 1e-12 * frozen.norm());

    let q = ConvolutionParams::new(11, 4, 2, c(0.15, 0.3), c(-0.1, 0.2), 3, 0.1).unwrap();
    let got = shifted_sum(&q, 2500).unwrap();
    let oracle = common::shifted_sum(11, 4, 2, c(0.15, 0.3), c(-0.1, 0.2), 3, 2500);
    assert!((got - oracle).norm() <= 1e-11 * oracle.norm());
}

#[test]
fn shifted_sum_thread_independent() {
    let p = ConvolutionParams::default_config();
    let x = 300_000;
    let a = with_threads(Some(1), || shifted_sum(&p, x).unwrap());
    let b = with_threads(Some(8), || shifted_sum(&p, x).unwrap());
    assert_eq!(a.re.to_bits(), b.re.to_bits());
    assert_eq!(a.im.to_bits(), b.im.to_bits());
}

#[test]
fn ramanujan_untwisted_and_twisted() {
    let one = DirichletCharacter::trivial();
    let zero = c(0.0, 0.0);
    let (lhs, rhs) = ramanujan_sides(c(4.0, 0.0), zero, zero, &one, &one, 100_000).unwrap();
    // ζ(4)⁴/ζ(8) = (π⁴/90)⁴ / (π⁸/9450)
    let pi4 = std::f64::consts::PI.powi(4);
    let closed = (pi4 / 90.0).powi(4) / (pi4 * pi4 / 9450.0);
    assert!((rhs.re - closed).abs() < 1e-12 * closed);
    assert!((lhs.value - rhs).norm() < 1e-5);
    let (_, rhs2) = ramanujan_sides(c(4.0, 0.0), zero, zero, &one, &one, 200_000).unwrap();
    assert_eq!(rhs, rhs2);

    let chi = DirichletCharacter::new(7, 2).unwrap();
    let (lhs, rhs) = ramanujan_sides(c(3.0, 0.7), c(0.4, 0.0), c(-0.2, 0.0), &chi, &chi, 200_000).unwrap();
    let d = (lhs.value - rhs).norm();
    assert!(d < 1e-5 && d <= lhs.tail_bound, "defect {d:e} tail {:e}", lhs.tail_bound);
    assert!(ramanujan_sides(c(1.2, 0.0), c(0.4, 0.0), zero, &chi, &chi, 10).is_err());
}

#[test]
fn hecke_relations_and_series() {
    let chi = DirichletCharacter::new(7, 2).unwrap();
    let a_p = tempered_hecke_eigenvalues(&chi, 100_000, 7);
    assert!(a_p.values().all(|z| z.norm() <= 2.0 + 1e-12));
    let a = hecke_sequence(&chi, &a_p, 100_000).unwrap();
    assert_eq!(a[1], c(1.0, 0.0));
    for p in [2usize, 3, 5, 11] {
        assert!((a[p * p] - (a[p] * a[p] - chi.eval(p as i64))).norm() < 1e-14);
    }
    assert!((a[6] - a[2] * a[3]).norm() < 1e-14);
    assert!((a[7 * 7] - a[7] * a[7]).norm() < 1e-14);

    let psi = DirichletCharacter::new(7, 4).unwrap();
    let s = c(5.0, 0.0);
    let v2 = c(0.3, 0.0);
    let d = sigma_series_defect(s, v2, &psi, &chi, &a, 100_000).unwrap();
    assert!(d < 1e-6);
    let half = sigma_series_defect(s, v2, &psi, &chi, &a, 50_000).unwrap();
    assert!(d <= half + 1e-12);
    let one = DirichletCharacter::trivial();
    assert!(sigma_series_defect(s, c(0.0, 0.0), &one, &chi, &a, 100_000).unwrap() < 1e-6);
    assert!(sigma_series_defect(c(2.0, 0.0), v2, &psi, &chi, &a, 10).is_err());

    let mut short = a_p.clone();
    short.remove(&97);
    assert!(hecke_sequence(&chi, &short, 100).is_err());
}

/// Σ over 0 < |n| ≤ T, n ≠ k, with an optional ₂F₁ weight.
fn lk_oracle(u: Complex64, v: Complex64, k: i64, s: Complex64, t: i64, weighted: bool) -> Complex64 {
    let mut acc = c(0.0, 0.0);
    for n in (-t..=t).filter(|&n| n != 0 && n != k) {
        let nf = n as f64;
        let term = common::sigma(2.0 * u, n, 7, 2) * common::sigma(2.0 * v, n - k, 7, 2)
            / Complex64::from(nf.abs()).powc(s + u + v);
        let w = if weighted {
            let z = 2.0 * k as f64 / nf - (k * k) as f64 / (nf * nf);
            common::hyp2f1((s + u + v) / 2.0, (s + u - v) / 2.0, s, z)
        } else {
            c(1.0, 0.0)
        };
        acc += term * w;
    }
    acc
}

#[test]
fn lk_truncations_against_oracle() {
    let (u, v) = (c(0.1, 0.2), c(-0.15, 0.1));
    let p = params(u, v);
    let s = c(2.3, 0.7);
    assert_eq!(lk_star(&p, s, 0).unwrap().value, c(0.0, 0.0));
    for t in [3, 40] {
        let want = lk_oracle(u, v, 1, s, t, false);
        assert!((lk_star(&p, s, t as u64).unwrap().value - want).norm() <= 1e-12 * want.norm());
        let want = lk_oracle(u, v, 1, s, t, true);
        assert!((lk_series(&p, s, t as u64).unwrap().value - want).norm() <= 1e-10 * want.norm());
    }
}

#[test]
fn lk_star_doubling_within_tail() {
    let p = params(c(0.1, 0.2), c(-0.15, 0.1));
    let s = c(2.5 + p.width(), 1.0);
    let a = lk_star(&p, s, 20_000).unwrap();
    let b = lk_star(&p, s, 40_000).unwrap();
    assert!((a.value - b.value).norm() <= a.tail_bound);
}

#[test]
fn hypergeometric_factor_tends_to_one() {
    let (u, v) = (c(0.0, 0.1), c(0.0, 0.07));
    let s = c(1.6, 2.0);
    let n = 1.0e6;
    let z = 2.0 / n - 1.0 / (n * n);
    let f = common::hyp2f1((s + u + v) / 2.0, (s + u - v) / 2.0, s, z);
    assert!((f - 1.0).norm() < 1e-5);
    let lib = shiftconv::special::hyp2f1((s + u + v) / 2.0, (s + u - v) / 2.0, s, z).unwrap();
    assert!((lib - f).norm() < 1e-14);
    let lib = shiftconv::special::hyp2f1((s + u + v) / 2.0, (s + u - v) / 2.0, s, -3.0).unwrap();
    let f = common::hyp2f1((s + u + v) / 2.0, (s + u - v) / 2.0, s, -3.0);
    assert!((lib - f).norm() < 1e-9 * f.norm());
}

#[test]
fn lk_difference_stays_bounded() {
    let p = params(c(0.1, 0.2), c(-0.15, 0.1));
    let s = c(p.width() + 0.3, 1.0);
    let d: Vec<f64> = [1_000u64, 10_000, 100_000]
        .iter()
        .map(|&t| (lk_series(&p, s, t).unwrap().value - lk_star(&p, s, t).unwrap().value).norm())
        .collect();
    let inc1 = (d[1] - d[0]).abs();
    let inc2 = (d[2] - d[1]).abs();
    assert!(inc2 < inc1 || inc2 < 1e-3, "{d:?}");
}

#[test]
fn sgt1_round_trip_and_rejection() {
    let chi = DirichletCharacter::new(7, 4).unwrap();
    let t = sieve_sigma(c(0.2, -0.3), &chi, 777).unwrap();
    let mut buf = Vec::new();
    t.write_to(&mut buf).unwrap();
    assert_eq!(buf.len(), 44 + 16 * 778);
    assert_eq!(&buf[..4], b"SGT1");
    let back = SigmaTable::read_from(&mut buf.as_slice()).unwrap();
    assert!(back.values() == t.values());
    assert_eq!(back.character().index(), 4);
    assert_eq!(back.exponent(), c(0.2, -0.3));

    let mut bad = buf.clone();
    bad[0] = b'X';
    assert!(SigmaTable::read_from(&mut bad.as_slice()).is_err());
    assert!(SigmaTable::read_from(&mut &buf[..100]).is_err());
}

#[test]
fn admissibility() {
    let (u, v) = (c(0.0, 0.1), c(0.0, 0.07));
    assert!(ConvolutionParams::new(8, 2, 2, u, v, 1, 0.1).is_err());
    assert!(ConvolutionParams::new(7, 1, 2, u, v, 1, 0.1).is_err());
    assert!(ConvolutionParams::new(7, 2, 4, u, v, 1, 0.1).is_err());
    assert!(ConvolutionParams::new(7, 2, 2, c(0.0, 0.0), v, 1, 0.1).is_err());
    assert!(ConvolutionParams::new(7, 2, 2, c(0.3, 0.0), c(0.25, 0.0), 1, 0.1).is_err());
    assert!(ConvolutionParams::new(7, 2, 2, u, v, 0, 0.1).is_err());
    assert!(ConvolutionParams::new(7, 2, 2, c(0.2, 0.0), c(0.2, 0.0), 1, 0.1).is_err());
    assert!(ConvolutionParams::new(7, 2, 2, c(0.2, 0.0), c(0.1, 0.0), 1, 0.1).is_ok());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coprime_divisor_reflection(n in 1i64..5000, ur in -0.25f64..0.25, ui in -3.0f64..3.0, idx in 0usize..2) {
        prop_assume!(n % 7 != 0);
        let chi = DirichletCharacter::new(7, [2, 4][idx]).unwrap();
        let u = c(ur, ui);
        let nf = Complex64::from(n as f64);
        let lhs = sigma(2.0 * u, n, &chi) / nf.powc(u);
        let rhs = chi.eval(n) * sigma(-2.0 * u, n, &chi.conjugate()) / nf.powc(-u);
        prop_assert!((lhs - rhs).norm() <= 1e-11 * lhs.norm().max(1.0));
    }

    #[test]
    fn k_symmetry(k in 1i64..3000, ur in -0.2f64..0.2, ui in -2.0f64..2.0, vr in -0.2f64..0.2, vi in -2.0f64..2.0) {
        prop_assume!(k % 7 != 0);
        let p = params(c(ur, ui), c(vr, vi));
        let w = 1.0 + 2.0 * (p.u() + p.v());
        let cp = p.chi_psi();
        let kf = Complex64::from(k as f64);
        let lhs = sigma(w, k, cp) / kf.powc(w);
        let rhs = cp.eval(k) * sigma(-w, k, &cp.conjugate());
        prop_assert!((lhs - rhs).norm() <= 1e-11 * lhs.norm().max(1.0));
    }

    #[test]
    fn sigma_even_and_multiplicative(m in 1i64..300, n in 1i64..300, re in -1.0f64..1.0, im in -2.0f64..2.0) {
        let chi = DirichletCharacter::new(11, 2).unwrap();
        let s = c(re, im);
        prop_assert_eq!(sigma(s, -m, &chi), sigma(s, m, &chi));
        if num_gcd(m, n) == 1 {
            let a = sigma(s, m * n, &chi);
            prop_assert!((a - sigma(s, m, &chi) * sigma(s, n, &chi)).norm() <= 1e-11 * a.norm().max(1.0));
        }
    }

    #[test]
    fn sieve_probe(x in 1u64..3000, re in -1.0f64..1.0, im in -2.0f64..2.0) {
        let chi = DirichletCharacter::new(13, 4).unwrap();
        let s = c(re, im);
        let t = sieve_sigma(s, &chi, x).unwrap();
        let n = x as i64;
        prop_assert!((t.get(n) - sigma(s, n, &chi)).norm() <= 1e-12 * t.get(n).norm().max(1.0));
    }
}

fn num_gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { num_gcd(b, a % b) }
}
