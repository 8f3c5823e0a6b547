//! Random tempered Hecke eigenvalues and the divisor-twisted L-series
//! identity they satisfy.

use num_complex::Complex64;
use shiftconv::chars::DirichletCharacter;
use shiftconv::divsum::{hecke_sequence, sigma_series_sides, tempered_hecke_eigenvalues};

fn main() -> shiftconv::error::Result<()> {
    let chi = DirichletCharacter::new(7, 2)?;
    let psi = DirichletCharacter::new(7, 4)?;
    let t = 100_000;
    let a_p = tempered_hecke_eigenvalues(&chi, t, 7);
    let max = a_p.values().map(|z| z.norm()).fold(0.0, f64::max);
    println!("{} primes, max |a(p)| = {max:.6}", a_p.len());
    let a = hecke_sequence(&chi, &a_p, t)?;
    println!("a(4) = {}, a(2)^2 - chi(2) = {}", a[4], a[2] * a[2] - chi.eval(2));
    println!("a(6) = {}, a(2)a(3) = {}", a[6], a[2] * a[3]);

    for t in [1_000, 10_000, 100_000] {
        let (l, r) = sigma_series_sides(Complex64::new(5.0, 0.0), Complex64::new(0.3, 0.1), &psi, &chi, &a, t)?;
        println!("T={t:>6}: lhs {l:.12}, rhs {r:.12}, defect {:.2e}", (l - r).norm());
    }
    Ok(())
}
