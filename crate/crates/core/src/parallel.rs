//! Fixed-order parallel reductions.
//!
//! Work is split into chunks whose boundaries depend only on the problem
//! size; partial results are combined sequentially in chunk order. Results
//! are therefore bit-identical for any worker count.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};

pub const CHUNK: usize = 1 << 16;

pub const THREADS_ENV: &str = "SHIFTCONV_THREADS";

/// Worker count from `SHIFTCONV_THREADS`, `None` when unset.
pub fn configured_threads() -> Result<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .map(Some)
            .ok_or_else(|| Error::InvalidParams(format!("{THREADS_ENV}={v} is not a positive integer"))),
    }
}

/// Runs `f` inside a dedicated pool; `None` means the logical core count.
pub fn with_threads<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        b = b.num_threads(n);
    }
    match b.build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// Per-chunk partial sums of `f(i)` for `i` in `lo..hi`.
pub fn chunk_partials<F>(lo: usize, hi: usize, f: F) -> Vec<Complex64>
where
    F: Fn(usize) -> Complex64 + Sync,
{
    if hi <= lo {
        return Vec::new();
    }
    let n_chunks = (hi - lo).div_ceil(CHUNK);
    (0..n_chunks)
        .into_par_iter()
        .map(|c| {
            let a = lo + c * CHUNK;
            let b = (a + CHUNK).min(hi);
            let mut s = Complex64::new(0.0, 0.0);
            for i in a..b {
                s += f(i);
            }
            s
        })
        .collect()
}

/// `Σ_{i=lo}^{hi−1} f(i)` in fixed chunk order.
pub fn ordered_sum<F>(lo: usize, hi: usize, f: F) -> Complex64
where
    F: Fn(usize) -> Complex64 + Sync,
{
    chunk_partials(lo, hi, f)
        .into_iter()
        .fold(Complex64::new(0.0, 0.0), |acc, x| acc + x)
}

/// Elementwise map over `0..n`, order-preserving.
pub fn par_map<T: Send, F: Fn(usize) -> T + Sync + Send>(n: usize, f: F) -> Vec<T> {
    (0..n).into_par_iter().map(f).collect()
}
