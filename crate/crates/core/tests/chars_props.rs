use num_complex::Complex64;
use proptest::prelude::*;
use shiftconv::chars::{char_conjugate, char_eval, char_product, gauss_sum, is_prime, DirichletCharacter};

fn primes_to_50() -> Vec<u64> {
    (2..=50).filter(|&n| is_prime(n)).collect()
}

fn character() -> impl Strategy<Value = DirichletCharacter> {
    proptest::sample::select(primes_to_50())
        .prop_flat_map(|n| (Just(n), 0..n - 1))
        .prop_map(|(n, i)| DirichletCharacter::new(n, i).unwrap())
}

#[test]
fn completely_multiplicative_on_all_pairs() {
    for n in primes_to_50() {
        for idx in 0..n - 1 {
            let chi = DirichletCharacter::new(n, idx).unwrap();
            for a in 0..n as i64 {
                for b in 0..n as i64 {
                    let d = char_eval(&chi, a * b) - char_eval(&chi, a) * char_eval(&chi, b);
                    assert!(d.norm() <= 1e-14, "N={n} idx={idx} a={a} b={b}");
                }
            }
        }
    }
}

#[test]
fn parity_is_exact() {
    for n in primes_to_50() {
        for idx in 0..n - 1 {
            let chi = DirichletCharacter::new(n, idx).unwrap();
            let sign = if idx % 2 == 0 { 1.0 } else { -1.0 };
            assert_eq!(char_eval(&chi, n as i64 - 1), Complex64::new(sign, 0.0), "N={n} idx={idx}");
        }
    }
}

#[test]
fn gauss_sum_modulus() {
    for n in [5u64, 7, 11, 13] {
        for idx in 1..n - 1 {
            let chi = DirichletCharacter::new(n, idx).unwrap();
            assert!((gauss_sum(&chi).norm_sqr() - n as f64).abs() <= 1e-10, "N={n} idx={idx}");
        }
    }
}

#[test]
fn small_values() {
    // χ mod 5 sending the primitive root 2 to i
    let chi = DirichletCharacter::new(5, 1).unwrap();
    assert!((chi.eval(2) - Complex64::new(0.0, 1.0)).norm() < 1e-15);
    assert!((chi.eval(3) - Complex64::new(0.0, -1.0)).norm() < 1e-15);
    assert_eq!(chi.eval(10), Complex64::new(0.0, 0.0));
    let quad = DirichletCharacter::new(5, 2).unwrap();
    assert!((gauss_sum(&quad) - Complex64::new(5f64.sqrt(), 0.0)).norm() < 1e-12);
}

proptest! {
    #[test]
    fn conjugate_matches_pointwise(chi in character(), n in -1000i64..1000) {
        let d = char_eval(&char_conjugate(&chi), n) - char_eval(&chi, n).conj();
        prop_assert!(d.norm() <= 1e-14);
    }

    #[test]
    fn periodic_and_unimodular(chi in character(), n in -1000i64..1000) {
        let q = chi.modulus() as i64;
        prop_assert!((chi.eval(n) - chi.eval(n + 7 * q)).norm() <= 1e-14);
        let z = chi.eval(n);
        if n.rem_euclid(q) == 0 {
            prop_assert_eq!(z, Complex64::new(0.0, 0.0));
        } else {
            prop_assert!((z.norm() - 1.0).abs() <= 1e-14);
        }
    }

    #[test]
    fn product_is_pointwise(chi in character(), j in 0u64..48, n in 1i64..500) {
        let psi = DirichletCharacter::new(chi.modulus(), j % (chi.modulus() - 1)).unwrap();
        let prod = char_product(&chi, &psi).unwrap();
        prop_assert!((prod.eval(n) - chi.eval(n) * psi.eval(n)).norm() <= 1e-14);
    }

    #[test]
    fn same_class_same_value(chi in character(), a in 1i64..1000) {
        let q = chi.modulus() as i64;
        prop_assert!((chi.eval(a) - chi.eval(a.rem_euclid(q) - q)).norm() <= 1e-14);
    }
}
