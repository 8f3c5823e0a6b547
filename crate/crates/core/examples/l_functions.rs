//! Dirichlet L-values, the completed function and its functional equation.

use num_complex::Complex64;
use shiftconv::chars::{even_nontrivial_characters, DirichletCharacter};
use shiftconv::lfun::{completed_l, dirichlet_l, functional_equation_defect, hurwitz_zeta, EulerMaclaurinSpec};

fn main() -> shiftconv::error::Result<()> {
    let one = DirichletCharacter::trivial();
    let s2 = Complex64::new(2.0, 0.0);
    println!("zeta(2) = {} (pi^2/6 = {})", dirichlet_l(s2, &one)?, std::f64::consts::PI.powi(2) / 6.0);
    let s = Complex64::new(0.5, 14.134725141734693);
    println!("|zeta(1/2 + 14.1347i)| = {:.3e}", dirichlet_l(s, &one)?.norm());
    let w = Complex64::new(0.3, 2.0);
    println!("zeta(0.3+2i, 0.25) = {}", hurwitz_zeta(w, 0.25, &EulerMaclaurinSpec::for_point(w))?);

    for n in [7, 11] {
        for chi in even_nontrivial_characters(n)? {
            let s = Complex64::new(0.25, 3.0);
            println!(
                "N={n} chi_{}: L(1,chi) = {:.10}, Lambda(s) = {:.10}, FE defect {:.2e}",
                chi.index(),
                dirichlet_l(Complex64::new(1.0, 0.0), &chi)?,
                completed_l(s, &chi)?,
                functional_equation_defect(s, &chi)?
            );
        }
    }
    Ok(())
}
