//! Character table mod 7 and its Gauss sums.

use shiftconv::chars::{even_nontrivial_characters, DirichletCharacter};

fn main() -> shiftconv::error::Result<()> {
    let n = 7;
    for index in 0..n - 1 {
        let chi = DirichletCharacter::new(n, index)?;
        let row: Vec<String> = (1..n as i64)
            .map(|a| {
                let z = chi.eval(a);
                format!("{:+.3}{:+.3}i", z.re, z.im)
            })
            .collect();
        let tau = chi.gauss_sum();
        println!(
            "chi_{index}: even={} |tau|^2={:.12} {}",
            chi.is_even(),
            tau.norm_sqr(),
            row.join(" ")
        );
    }
    let evens: Vec<u64> = even_nontrivial_characters(n)?.iter().map(|c| c.index()).collect();
    println!("even nontrivial indices mod {n}: {evens:?}");

    let chi = DirichletCharacter::new(n, 2)?;
    let prod = chi.product(&chi)?;
    println!(
        "chi_2 * chi_2 = chi_{}, conjugate of chi_2 = chi_{}",
        prod.index(),
        chi.conjugate().index()
    );
    Ok(())
}
