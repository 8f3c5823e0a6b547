//! Twisted divisor sums: direct, sieved, and Ramanujan's identity for
//! their product Dirichlet series.

use num_complex::Complex64;
use shiftconv::chars::DirichletCharacter;
use shiftconv::divsum::{divisors, ramanujan_sides, sieve_sigma, sigma};

fn main() -> shiftconv::error::Result<()> {
    let chi = DirichletCharacter::new(7, 2)?;
    let s = Complex64::new(0.2, 0.1);
    println!("divisors(360) = {:?}", divisors(360));
    let table = sieve_sigma(s, &chi, 100_000)?;
    let worst = (1..=2_000i64)
        .map(|n| (table.get(n) - sigma(s, n, &chi)).norm() / sigma(s, n, &chi).norm().max(1e-300))
        .fold(0.0, f64::max);
    println!("sieve vs direct sigma over n <= 2000: max rel diff {worst:.2e}");
    println!("sigma(-12) = {} = sigma(12) = {}", table.get(-12), table.get(12));

    let (lhs, rhs) = ramanujan_sides(Complex64::new(3.0, 0.7), Complex64::new(0.4, 0.0), Complex64::new(-0.2, 0.0), &chi, &chi, 200_000)?;
    println!(
        "Ramanujan: truncated {} (tail <= {:.1e}), L-side {}, defect {:.2e}",
        lhs.value,
        lhs.tail_bound,
        rhs,
        (lhs.value - rhs).norm()
    );
    Ok(())
}
