//! The explicit pieces of the spectral expansion of L_k: the R and V terms,
//! the continuous-spectrum integral, and the pole of L_k^R that produces
//! the upper main term.

use num_complex::Complex64;
use shiftconv::divsum::{lk_series, lk_star, ConvolutionParams};
use shiftconv::spectral::{lk_cont, lk_r, lk_r_residue, lk_v, main_term_coefficients, SpectralTruncation};

fn main() -> shiftconv::error::Result<()> {
    let p = ConvolutionParams::default_config();
    for s in [Complex64::new(2.0, 0.0), Complex64::new(1.6, 5.0), Complex64::new(0.8, 10.0)] {
        let cont = lk_cont(&p, s, SpectralTruncation::default_for(s))?;
        println!(
            "s={s}: L^R {:.10}, L^V {:.10}, L^cont {:.10} (tail <= {:.1e})",
            lk_r(&p, s)?,
            lk_v(&p, s)?,
            cont.value,
            cont.tail_bound
        );
    }

    let s = Complex64::new(1.9, 1.0);
    for t in [1_000, 10_000, 100_000] {
        let full = lk_series(&p, s, t)?;
        let star = lk_star(&p, s, t)?;
        println!("T={t:>6}: L_k {:.10}, L_k* {:.10}", full.value, star.value);
    }

    let res = lk_r_residue(&p)?;
    let upper = main_term_coefficients(&p)?.upper;
    println!("Res L^R / 2 = {:.15}", res / 2.0);
    println!("upper main-term coefficient = {upper:.15}");
    Ok(())
}
