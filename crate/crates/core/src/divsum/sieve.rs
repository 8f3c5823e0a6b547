use std::io::{Read, Write};
use std::path::Path;
use std::sync::atomic::{AtomicU64, Ordering};

use num_complex::Complex64;
use rayon::prelude::*;

use super::int_pow;
use crate::chars::DirichletCharacter;
use crate::error::{Error, Result};
use crate::parallel::CHUNK;

pub const DEFAULT_SIEVE_LIMIT: u64 = 20_000_000;

static SIEVE_LIMIT: AtomicU64 = AtomicU64::new(DEFAULT_SIEVE_LIMIT);

/// Largest `X` a single sieve may cover.
pub fn sieve_limit() -> u64 {
    SIEVE_LIMIT.load(Ordering::Relaxed)
}

pub fn set_sieve_limit(x: u64) {
    SIEVE_LIMIT.store(x, Ordering::Relaxed);
}

const MAGIC: &[u8; 4] = b"SGT1";

/// `σ_s(n,χ)` for `0 ≤ n ≤ X`.
#[derive(Debug, Clone, PartialEq)]
pub struct SigmaTable {
    exponent: Complex64,
    character: DirichletCharacter,
    values: Vec<Complex64>,
}

impl SigmaTable {
    pub fn exponent(&self) -> Complex64 {
        self.exponent
    }

    pub fn character(&self) -> &DirichletCharacter {
        &self.character
    }

    pub fn limit(&self) -> u64 {
        (self.values.len() - 1) as u64
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// `σ_s(n,χ)` for `|n| ≤ X`, using the even extension.
    #[inline]
    pub fn get(&self, n: i64) -> Complex64 {
        self.values[n.unsigned_abs() as usize]
    }

    pub fn write_to(&self, w: &mut impl Write) -> Result<()> {
        w.write_all(MAGIC)?;
        w.write_all(&self.character.modulus().to_le_bytes())?;
        w.write_all(&self.character.index().to_le_bytes())?;
        w.write_all(&self.exponent.re.to_le_bytes())?;
        w.write_all(&self.exponent.im.to_le_bytes())?;
        w.write_all(&self.limit().to_le_bytes())?;
        let mut buf = Vec::with_capacity(self.values.len() * 16);
        for v in &self.values {
            buf.extend_from_slice(&v.re.to_le_bytes());
            buf.extend_from_slice(&v.im.to_le_bytes());
        }
        w.write_all(&buf)?;
        Ok(())
    }

    pub fn read_from(r: &mut impl Read) -> Result<Self> {
        let mut magic = [0u8; 4];
        r.read_exact(&mut magic)?;
        if &magic != MAGIC {
            return Err(Error::Format("not a SigmaTable file (bad magic)".into()));
        }
        let mut b8 = [0u8; 8];
        let mut next = |r: &mut dyn Read| -> Result<[u8; 8]> {
            r.read_exact(&mut b8)?;
            Ok(b8)
        };
        let modulus = u64::from_le_bytes(next(r)?);
        let index = u64::from_le_bytes(next(r)?);
        let re = f64::from_le_bytes(next(r)?);
        let im = f64::from_le_bytes(next(r)?);
        let x = u64::from_le_bytes(next(r)?);
        let character = DirichletCharacter::new(modulus, index)?;
        let len = x
            .checked_add(1)
            .and_then(|l| usize::try_from(l).ok())
            .ok_or_else(|| Error::Format("table length overflow".into()))?;
        let mut raw = vec![0u8; len.checked_mul(16).ok_or_else(|| Error::Format("table too large".into()))?];
        r.read_exact(&mut raw)
            .map_err(|_| Error::Format("truncated SigmaTable payload".into()))?;
        let values = raw
            .chunks_exact(16)
            .map(|c| {
                Complex64::new(
                    f64::from_le_bytes(c[..8].try_into().unwrap()),
                    f64::from_le_bytes(c[8..].try_into().unwrap()),
                )
            })
            .collect();
        Ok(SigmaTable {
            exponent: Complex64::new(re, im),
            character,
            values,
        })
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let mut f = std::io::BufWriter::new(std::fs::File::create(path)?);
        self.write_to(&mut f)?;
        f.flush()?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let mut f = std::io::BufReader::new(std::fs::File::open(path)?);
        Self::read_from(&mut f)
    }
}

pub fn sieve_sigma(s: Complex64, chi: &DirichletCharacter, x: u64) -> Result<SigmaTable> {
    sieve_sigma_chunked(s, chi, x, CHUNK)
}

/// Divisor sieve over output blocks of `chunk` entries.
///
/// Each entry accumulates its divisors in ascending order whatever the block
/// size, so every chunking gives the same bits.
pub fn sieve_sigma_chunked(
    s: Complex64,
    chi: &DirichletCharacter,
    x: u64,
    chunk: usize,
) -> Result<SigmaTable> {
    if x == 0 {
        return Err(Error::domain("sieve_sigma needs X ≥ 1"));
    }
    let limit = sieve_limit();
    if x > limit {
        return Err(Error::Resource {
            what: format!("sigma sieve to X = {x}"),
            required_bytes: 16 * (x + 1),
            limit_bytes: 16 * (limit + 1),
        });
    }
    let len = (x + 1) as usize;
    let mut values = vec![Complex64::new(0.0, 0.0); len];
    let chunk = chunk.max(1);
    let weight = |d: u64| {
        let c = chi.eval(d as i64);
        if c == Complex64::new(0.0, 0.0) {
            c
        } else {
            c * int_pow(d, s)
        }
    };
    values.par_chunks_mut(chunk).enumerate().for_each(|(ci, block)| {
        let lo = (ci * chunk) as u64;
        let hi = lo + block.len() as u64; // exclusive
        let mut root = (hi as f64).sqrt() as u64 + 1;
        while root * root >= hi && root > 0 {
            root -= 1;
        }
        // small divisors d with d² ≤ m, ascending in d
        let mut d = 1u64;
        while d * d < hi {
            let w = weight(d);
            let start = (d * d).max(lo.div_ceil(d) * d);
            let mut m = start;
            while m < hi {
                block[(m - lo) as usize] += w;
                m += d;
            }
            d += 1;
        }
        // large divisors m/q with q² < m, ascending in m/q = descending in q
        let mut q = root;
        while q >= 1 {
            let start = (q * q + 1).max(lo).div_ceil(q) * q;
            let mut m = start;
            while m < hi {
                block[(m - lo) as usize] += weight(m / q);
                m += q;
            }
            q -= 1;
        }
    });
    values[0] = Complex64::new(0.0, 0.0);
    Ok(SigmaTable {
        exponent: s,
        character: chi.clone(),
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divsum::sigma;
    use rand::{Rng, SeedableRng};

    #[test]
    fn matches_enumeration() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let chi = DirichletCharacter::new(7, 2).unwrap();
        let s = Complex64::new(0.2, 0.3);
        let t = sieve_sigma(s, &chi, 1000).unwrap();
        assert_eq!(t.get(0), Complex64::new(0.0, 0.0));
        assert_eq!(t.get(1), Complex64::new(1.0, 0.0));
        for _ in 0..100 {
            let n = rng.gen_range(1..=1000i64);
            assert!((t.get(n) - sigma(s, n, &chi)).norm() < 1e-12);
        }
    }

    #[test]
    fn chunking_is_invisible() {
        let chi = DirichletCharacter::new(11, 4).unwrap();
        let s = Complex64::new(-0.3, 1.1);
        let a = sieve_sigma_chunked(s, &chi, 50_000, 977).unwrap();
        let b = sieve_sigma_chunked(s, &chi, 50_000, 65_536).unwrap();
        let c = sieve_sigma_chunked(s, &chi, 50_000, 1).unwrap();
        for n in 0..=50_000 {
            assert_eq!(a.get(n).re.to_bits(), b.get(n).re.to_bits());
            assert_eq!(a.get(n).im.to_bits(), b.get(n).im.to_bits());
            assert_eq!(a.get(n), c.get(n));
        }
    }

    #[test]
    fn resource_limit() {
        let chi = DirichletCharacter::new(7, 2).unwrap();
        match sieve_sigma(Complex64::new(0.0, 0.0), &chi, DEFAULT_SIEVE_LIMIT + 1) {
            Err(Error::Resource { required_bytes, .. }) => {
                assert_eq!(required_bytes, 16 * (DEFAULT_SIEVE_LIMIT + 2))
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn binary_round_trip() {
        let chi = DirichletCharacter::new(7, 4).unwrap();
        let t = sieve_sigma(Complex64::new(0.4, -0.2), &chi, 300).unwrap();
        let mut buf = Vec::new();
        t.write_to(&mut buf).unwrap();
        assert_eq!(&buf[..4], b"SGT1");
        assert_eq!(buf.len(), 4 + 5 * 8 + 301 * 16);
        let back = SigmaTable::read_from(&mut buf.as_slice()).unwrap();
        assert_eq!(back, t);
        buf[0] = b'X';
        assert!(matches!(SigmaTable::read_from(&mut buf.as_slice()), Err(Error::Format(_))));
    }
}
