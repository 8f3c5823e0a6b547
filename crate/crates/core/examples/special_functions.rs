//! Gamma, K-Bessel and 2F1, and the two Bessel Mellin closed forms against
//! quadrature.

use num_complex::Complex64;
use shiftconv::special::{
    bessel_k, bessel_mellin_closed, bessel_product_mellin_closed, gamma, hyp2f1, ln_gamma,
    mellin_quadrature, QuadratureSpec,
};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn main() -> shiftconv::error::Result<()> {
    println!("Gamma(1/2)      = {}", gamma(c(0.5, 0.0))?);
    println!("Gamma(0.3+4i)   = {}", gamma(c(0.3, 4.0))?);
    println!("lnGamma(100+i)  = {}", ln_gamma(c(100.0, 1.0))?);
    println!("K_{{0.2+1i}}(1.5) = {}", bessel_k(c(0.2, 1.0), 1.5)?);
    println!("K_{{-0.2-1i}}(1.5)= {}", bessel_k(c(-0.2, -1.0), 1.5)?);
    println!("2F1(1,1;2;0.5)  = {} (2 ln 2 = {})", hyp2f1(c(1.0, 0.0), c(1.0, 0.0), c(2.0, 0.0), 0.5)?, 2.0 * 2f64.ln());

    // ∫ K_u(a y) y^s dy/y
    let (a, s, u) = (1.3, c(1.4, 0.5), c(0.2, 0.3));
    let closed = bessel_mellin_closed(c(a, 0.0), s, u)?;
    let spec = QuadratureSpec::for_bessel(s.re - u.re.abs(), a);
    let quad = mellin_quadrature(|y| bessel_k(u, a * y).unwrap(), s, &spec)?;
    println!("M[K_u(ay)](s): closed {closed}, quadrature {}, rel {:.2e}", quad.value, (closed - quad.value).norm() / closed.norm());

    // ∫ K_u(a y) K_v(b y) y^s dy/y
    let (b, v) = (0.9, c(-0.1, 0.4));
    let closed = bessel_product_mellin_closed(a, b, s, u, v)?;
    let spec = QuadratureSpec::for_bessel(s.re - u.re.abs() - v.re.abs(), a + b);
    let quad = mellin_quadrature(|y| bessel_k(u, a * y).unwrap() * bessel_k(v, b * y).unwrap(), s, &spec)?;
    println!("M[K_u(ay)K_v(by)](s): closed {closed}, quadrature {}, rel {:.2e}", quad.value, (closed - quad.value).norm() / closed.norm());
    Ok(())
}
