//! Dirichlet characters modulo a prime, plus the trivial character mod 1.
//!
//! A character is stored by its index `j`: with `g` the smallest primitive
//! root mod `N`, `χ(g^a) = e(j·a/(N−1))`.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// `e(num/den) = exp(2πi·num/den)` from the exact rational angle.
///
/// Quarter turns are returned exactly.
pub fn unit_root(num: i64, den: u64) -> Complex64 {
    assert!(den > 0);
    let d = den as i128;
    let mut r = (num as i128).rem_euclid(d);
    if (4 * r) % d == 0 {
        return match 4 * r / d {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    if 2 * r > d {
        r -= d;
    }
    let theta = 2.0 * std::f64::consts::PI * (r as f64) / (den as f64);
    let (s, c) = theta.sin_cos();
    Complex64::new(c, s)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % m as u128) as u64;
        }
        b = ((b as u128 * b as u128) % m as u128) as u64;
        e >>= 1;
    }
    r
}

/// Smallest primitive root modulo the prime `p`.
pub fn primitive_root(p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Ok(1);
    }
    let phi = p - 1;
    let mut factors = Vec::new();
    let mut m = phi;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            factors.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, phi / q, p) != 1))
        .ok_or(Error::NotPrime(p))
}

#[derive(Clone)]
pub struct DirichletCharacter {
    modulus: u64,
    index: u64,
    primitive_root: u64,
    // log_table[r] = a with g^a ≡ r (mod N), r in 1..N; entry 0 unused.
    log_table: Arc<[u64]>,
}

impl fmt::Debug for DirichletCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DirichletCharacter(mod {}, index {})", self.modulus, self.index)
    }
}

impl PartialEq for DirichletCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus && self.index == other.index
    }
}

impl Eq for DirichletCharacter {}

impl DirichletCharacter {
    /// The character `𝟙` mod 1.
    pub fn trivial() -> Self {
        DirichletCharacter {
            modulus: 1,
            index: 0,
            primitive_root: 1,
            log_table: Arc::from(vec![0u64]),
        }
    }

    /// Character mod `modulus` (1 or a prime) with the given index.
    pub fn new(modulus: u64, index: u64) -> Result<Self> {
        if modulus == 1 {
            if index != 0 {
                return Err(Error::InvalidParams(
                    "the character mod 1 has index 0".into(),
                ));
            }
            return Ok(Self::trivial());
        }
        let g = primitive_root(modulus)?;
        if index >= modulus - 1 {
            return Err(Error::InvalidParams(format!(
                "index {index} out of range for modulus {modulus}"
            )));
        }
        let mut table = vec![0u64; modulus as usize];
        let mut x = 1u64;
        for a in 0..modulus - 1 {
            table[x as usize] = a;
            x = x * g % modulus;
        }
        Ok(DirichletCharacter {
            modulus,
            index,
            primitive_root: g,
            log_table: Arc::from(table),
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn primitive_root(&self) -> u64 {
        self.primitive_root
    }

    /// Discrete log of `n` base the primitive root, `None` when `N | n`.
    pub fn discrete_log(&self, n: i64) -> Option<u64> {
        if self.modulus == 1 {
            return Some(0);
        }
        let r = n.rem_euclid(self.modulus as i64) as usize;
        if r == 0 {
            None
        } else {
            Some(self.log_table[r])
        }
    }

    pub fn eval(&self, n: i64) -> Complex64 {
        if self.modulus == 1 {
            return Complex64::new(1.0, 0.0);
        }
        match self.discrete_log(n) {
            None => Complex64::new(0.0, 0.0),
            Some(a) => {
                let m = self.modulus - 1;
                let r = ((self.index as u128 * a as u128) % m as u128) as i64;
                unit_root(r, m)
            }
        }
    }

    /// True for `𝟙` and for the principal character mod `N` (index 0).
    pub fn is_principal(&self) -> bool {
        self.index == 0
    }

    /// True only for `𝟙` mod 1.
    pub fn is_one(&self) -> bool {
        self.modulus == 1
    }

    pub fn is_even(&self) -> bool {
        self.index % 2 == 0
    }

    /// Nontrivial, even, modulus prime: the characters the theory admits besides `𝟙`.
    pub fn is_even_primitive(&self) -> bool {
        self.modulus > 1 && self.index != 0 && self.is_even()
    }

    pub fn conjugate(&self) -> Self {
        if self.modulus == 1 {
            return self.clone();
        }
        let m = self.modulus - 1;
        DirichletCharacter {
            index: (m - self.index) % m,
            ..self.clone()
        }
    }

    /// Pointwise product. `𝟙` acts as the identity for any modulus.
    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.modulus == 1 {
            return Ok(other.clone());
        }
        if other.modulus == 1 {
            return Ok(self.clone());
        }
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus, other.modulus));
        }
        let m = self.modulus - 1;
        Ok(DirichletCharacter {
            index: (self.index + other.index) % m,
            ..self.clone()
        })
    }

    /// `τ(χ) = Σ_{a=1}^{N} χ(a) e(a/N)`.
    pub fn gauss_sum(&self) -> Complex64 {
        if self.modulus == 1 {
            return Complex64::new(1.0, 0.0);
        }
        let n = self.modulus;
        (1..=n as i64)
            .map(|a| self.eval(a) * unit_root(a, n))
            .sum()
    }
}

pub fn char_eval(chi: &DirichletCharacter, n: i64) -> Complex64 {
    chi.eval(n)
}

pub fn char_product(chi: &DirichletCharacter, psi: &DirichletCharacter) -> Result<DirichletCharacter> {
    chi.product(psi)
}

pub fn char_conjugate(chi: &DirichletCharacter) -> DirichletCharacter {
    chi.conjugate()
}

pub fn gauss_sum(chi: &DirichletCharacter) -> Complex64 {
    chi.gauss_sum()
}

/// All even characters mod the prime `n` with nonzero index.
pub fn even_nontrivial_characters(n: u64) -> Result<Vec<DirichletCharacter>> {
    if !is_prime(n) {
        return Err(Error::NotPrime(n));
    }
    let base = DirichletCharacter::new(n, 0)?;
    Ok((2..n - 1)
        .step_by(2)
        .map(|j| DirichletCharacter { index: j, ..base.clone() })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_log(g: u64, r: u64, n: u64) -> u64 {
        (0..n - 1).find(|&a| pow_mod(g, a, n) == r).unwrap()
    }

    #[test]
    fn mod5_index1_at_3_is_minus_i() {
        let chi = DirichletCharacter::new(5, 1).unwrap();
        assert_eq!(chi.primitive_root(), 2);
        assert_eq!(brute_log(2, 3, 5), 3);
        assert_eq!(chi.eval(3), Complex64::new(0.0, -1.0));
        assert_eq!(chi.eval(2), Complex64::new(0.0, 1.0));
        assert_eq!(chi.eval(10), Complex64::new(0.0, 0.0));
        assert_eq!(chi.eval(1), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn products_and_conjugates() {
        let a = DirichletCharacter::new(7, 2).unwrap();
        assert_eq!(a.product(&a).unwrap().index(), 4);
        let b = DirichletCharacter::new(5, 2).unwrap();
        assert!(b.product(&b).unwrap().is_principal());
        assert!(a.product(&a.conjugate()).unwrap().is_principal());
        let c = DirichletCharacter::new(5, 1).unwrap();
        assert_eq!(c.conjugate().index(), 3);
        assert_eq!(c.conjugate().eval(2), Complex64::new(0.0, -1.0));
        let q = DirichletCharacter::new(7, 3).unwrap();
        assert_eq!(q.conjugate(), q);
        let one = DirichletCharacter::trivial();
        assert_eq!(one.conjugate(), one);
        assert!(matches!(
            a.product(&c),
            Err(Error::ModulusMismatch(7, 5))
        ));
        assert_eq!(one.product(&a).unwrap(), a);
    }

    #[test]
    fn gauss_sums() {
        assert_eq!(DirichletCharacter::trivial().gauss_sum(), Complex64::new(1.0, 0.0));
        let quad = DirichletCharacter::new(5, 2).unwrap();
        let oracle = 2.0 * (2.0 * std::f64::consts::PI / 5.0).cos()
            - 2.0 * (4.0 * std::f64::consts::PI / 5.0).cos();
        let t = quad.gauss_sum();
        assert!((t.re - oracle).abs() < 1e-14 && t.im.abs() < 1e-14);
        assert!((t.re - 5f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn even_nontrivial_lists() {
        assert!(even_nontrivial_characters(3).unwrap().is_empty());
        let five = even_nontrivial_characters(5).unwrap();
        assert_eq!(five.iter().map(|c| c.index()).collect::<Vec<_>>(), vec![2]);
        let seven = even_nontrivial_characters(7).unwrap();
        assert_eq!(seven.iter().map(|c| c.index()).collect::<Vec<_>>(), vec![2, 4]);
        assert!(seven[0].product(&seven[1]).unwrap().is_principal());
        assert_eq!(seven[1].product(&seven[1]).unwrap().index(), 2);
        assert!(matches!(even_nontrivial_characters(9), Err(Error::NotPrime(9))));
    }

    #[test]
    fn modulus_one() {
        let one = DirichletCharacter::new(1, 0).unwrap();
        assert_eq!(one.eval(0), Complex64::new(1.0, 0.0));
        assert_eq!(one.eval(-17), Complex64::new(1.0, 0.0));
        assert!(DirichletCharacter::new(1, 1).is_err());
    }

    #[test]
    fn primitive_roots_match_brute_force() {
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
            let g = primitive_root(p).unwrap();
            let brute = (2..p)
                .find(|&c| (1..p - 1).all(|e| pow_mod(c, e, p) != 1))
                .unwrap();
            assert_eq!(g, brute, "p = {p}");
        }
    }
}
