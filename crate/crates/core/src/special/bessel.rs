//! `K_u(y) = ½∫₀^∞ exp(−y(t+t⁻¹)/2) t^u dt/t` for complex order and real `y > 0`.
//!
//! With `t = e^x` the integrand is `exp(−y cosh x + u x)`. For `ℑu ≠ 0` the
//! path is moved to `x + iη`, which removes most of the oscillation; the
//! trapezoid rule on the shifted line converges geometrically.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Integrand orders of magnitude kept on each side of the peak.
const TAIL_LOG: f64 = 45.0;
const REL_TOL: f64 = 1e-14;
const MIN_STEP: f64 = 1.0 / 16384.0;

fn contour_height(u: Complex64, y: f64) -> f64 {
    let b = u.im;
    if b == 0.0 {
        return 0.0;
    }
    let eta = if b.abs() < y {
        (b.abs() / y).asin()
    } else {
        FRAC_PI_2
    };
    let delta = (6.0 / b.abs()).min(0.6);
    eta.min(FRAC_PI_2 - delta).copysign(b)
}

fn bisect(f: impl Fn(f64) -> f64, mut inside: f64, mut outside: f64) -> f64 {
    for _ in 0..200 {
        let mid = 0.5 * (inside + outside);
        if f(mid) > 0.0 {
            inside = mid;
        } else {
            outside = mid;
        }
        if (outside - inside).abs() < 1e-9 {
            break;
        }
    }
    outside
}

/// `e^y K_u(y)`; avoids underflow for large `y`.
pub fn bessel_k_scaled(u: Complex64, y: f64) -> Result<Complex64> {
    if !(y > 0.0) || !y.is_finite() {
        return Err(Error::domain(format!("bessel_k needs y > 0, got {y}")));
    }
    let eta = contour_height(u, y);
    let (se, ce) = eta.sin_cos();
    let a = u.re;

    // log-magnitude of the integrand along the shifted line
    let lm = |x: f64| -y * (x.clamp(-700.0, 700.0).cosh() * ce - 1.0) + a * x;
    let x_peak = (a / (y * ce)).asinh();
    let peak = lm(x_peak);
    let cut = |x: f64| lm(x) - (peak - TAIL_LOG);
    let mut hi_out = x_peak + 1.0;
    while cut(hi_out) > 0.0 {
        hi_out = x_peak + 2.0 * (hi_out - x_peak);
    }
    let mut lo_out = x_peak - 1.0;
    while cut(lo_out) > 0.0 {
        lo_out = x_peak - 2.0 * (x_peak - lo_out);
    }
    let hi = bisect(cut, x_peak, hi_out);
    let lo = bisect(cut, x_peak, lo_out);

    let f = |x: f64| {
        // exp(−y(cosh(x+iη) − 1) + u(x+iη))
        let (sx, cx) = (x.sinh(), x.cosh());
        let re = -y * (cx * ce - 1.0) + a * x - u.im * eta;
        let im = -y * sx * se + u.im * x + a * eta;
        Complex64::from_polar(re.exp(), im)
    };

    let mut h = 0.5;
    let n0 = ((hi - lo) / h).ceil().max(2.0) as usize;
    let mut sum = (f(lo) + f(lo + n0 as f64 * h)) * 0.5;
    let mut abs_sum = sum.norm();
    for j in 1..n0 {
        let v = f(lo + j as f64 * h);
        sum += v;
        abs_sum += v.norm();
    }
    let mut val = sum * h;
    let mut n = n0;
    loop {
        let h2 = 0.5 * h;
        let mut mid = Complex64::new(0.0, 0.0);
        for j in 0..n {
            let v = f(lo + (2 * j + 1) as f64 * h2);
            mid += v;
            abs_sum += v.norm();
        }
        sum += mid;
        n *= 2;
        let next = sum * h2;
        let floor = 4.0 * f64::EPSILON * abs_sum * h2;
        let change = (next - val).norm();
        val = next;
        h = h2;
        if change <= REL_TOL * val.norm() || change <= floor || h < MIN_STEP {
            break;
        }
    }
    Ok(val * 0.5)
}

pub fn bessel_k(u: Complex64, y: f64) -> Result<Complex64> {
    Ok(bessel_k_scaled(u, y)? * (-y).exp())
}

/// Upper envelope used by truncation certificates:
/// `|K_ν(y)| ≤ √(π/(2y)) e^{−y}` for `|ℜν| ≤ ½` and `y ≥ ½`.
pub fn bessel_k_envelope(y: f64) -> f64 {
    (std::f64::consts::PI / (2.0 * y)).sqrt() * (-y).exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    // plain trapezoid on [−L, L] at a fine fixed step, no contour shift
    fn naive(u: Complex64, y: f64, h: f64) -> Complex64 {
        let l = 12.0;
        let n = (2.0 * l / h) as i64;
        let mut s = Complex64::new(0.0, 0.0);
        for j in 0..=n {
            let x = -l + j as f64 * h;
            let w = if j == 0 || j == n { 0.5 } else { 1.0 };
            s += w * (-y * x.cosh() + u * x).exp();
        }
        s * h * 0.5
    }

    #[test]
    fn half_integer_order_closed_form() {
        let k = bessel_k(c(0.5, 0.0), 2.0).unwrap();
        let exact = (PI / 4.0).sqrt() * (-2.0f64).exp();
        assert!((k.re - exact).abs() < 1e-15 && k.im.abs() < 1e-16);
        let k15 = bessel_k(c(1.5, 0.0), 3.0).unwrap();
        let exact15 = (PI / 6.0).sqrt() * (-3.0f64).exp() * (1.0 + 1.0 / 3.0);
        assert!((k15.re - exact15).abs() < 1e-14 * exact15);
    }

    #[test]
    fn k0_at_one() {
        let k = bessel_k(c(0.0, 0.0), 1.0).unwrap();
        assert!((k.re - 0.421_024_438_240_708_3).abs() < 1e-15);
        let oracle = naive(c(0.0, 0.0), 1.0, 1e-3);
        assert!((k - oracle).norm() < 1e-14);
    }

    #[test]
    fn matches_unshifted_quadrature() {
        for &(u, y) in &[
            (c(0.3, 0.7), 1.0),
            (c(-0.2, 2.0), 0.4),
            (c(0.0, 4.0), 3.0),
            (c(1.1, -1.5), 0.8),
        ] {
            let a = bessel_k(u, y).unwrap();
            let b = naive(u, y, 2e-3);
            assert!((a - b).norm() < 1e-12 * b.norm(), "u={u} y={y}");
        }
    }

    #[test]
    fn reflection_in_order() {
        let u = c(0.3, 0.7);
        let a = bessel_k(u, 1.0).unwrap();
        let b = bessel_k(-u, 1.0).unwrap();
        assert!((a - b).norm() < 1e-12 * a.norm());
        let frozen = c(0.359_387_451_708_934_15, 0.056_709_101_796_169_79);
        assert!((a - frozen).norm() < 1e-13);
    }

    #[test]
    fn frozen_large_imaginary_order() {
        // values from an independent arbitrary-precision evaluation
        let k = bessel_k(c(0.0, 10.0), 2.0).unwrap();
        let frozen = c(1.173_570_422_122_061_2e-7, 0.0);
        assert!((k - frozen).norm() < 1e-10 * frozen.norm(), "{k}");
        assert!(bessel_k(c(0.0, 1.0), 0.0).is_err());
        assert!(bessel_k(c(0.0, 1.0), -1.0).is_err());
    }

    #[test]
    fn scaled_large_argument() {
        let ks = bessel_k_scaled(c(0.5, 0.0), 900.0).unwrap();
        let exact = (PI / 1800.0).sqrt();
        assert!((ks.re - exact).abs() < 1e-12 * exact);
    }
}
