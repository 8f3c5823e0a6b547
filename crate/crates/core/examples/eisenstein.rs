//! Completed Eisenstein series at level 7: the functional equation, the
//! Fricke involution, and the constant-term Mellin transform.

use num_complex::Complex64;
use num_rational::Ratio;
use shiftconv::chars::DirichletCharacter;
use shiftconv::divsum::ConvolutionParams;
use shiftconv::eisenstein::{
    c_mellin_closed, c_series, eisenstein_functional_defect, eisenstein_star, fricke_defect, Cusp,
    EisensteinFamily, UpperHalfPoint,
};

fn main() -> shiftconv::error::Result<()> {
    let psi = DirichletCharacter::new(7, 2)?;
    let z = UpperHalfPoint::from_rational(Ratio::new(1, 10), Ratio::new(2, 5))?;
    let s = Complex64::new(0.4, 0.6);
    for t in [10, 20, 40] {
        let e = eisenstein_star(&EisensteinFamily::one_psi_bar(psi.clone())?, &z, s, t)?;
        println!("E*(z,s) with |n| <= {t:>2}: {:.15} (tail <= {:.1e})", e.value, e.tail_bound);
    }
    println!("s <-> 1-s defect: {:.2e}", eisenstein_functional_defect(&psi, &z, s, 40)?);
    println!("Fricke defect:    {:.2e}", fricke_defect(&psi, &z, s, 40)?);

    let p = ConvolutionParams::new(7, 2, 2, Complex64::new(0.1, 0.2), Complex64::new(-0.15, 0.1), 2, 0.1)?;
    let w = Complex64::new(1.8, 0.0);
    for cusp in [Cusp::Infinity, Cusp::Zero] {
        println!("C_{} Mellin closed at s=1.8: {}", cusp.name(), c_mellin_closed(&p, w, cusp)?);
    }
    let c = c_series(&p, Cusp::Infinity, 1.0, 50)?;
    println!("C_i∞(y=1) from 50 terms: {} (tail <= {:.1e})", c.value, c.tail_bound);
    Ok(())
}
