//! The shifted convolution sum against its two-power main term, the
//! residual exponent fit and the exponents it is compared with.

use num_rational::Ratio;
use shiftconv::divsum::{shifted_sum_grid, ConvolutionParams};
use shiftconv::spectral::{main_term, residual_fit, theorem_exponents, theorem_exponents_exact};

fn main() -> shiftconv::error::Result<()> {
    let p = ConvolutionParams::default_config();
    let xs = [10_000, 30_000, 100_000, 300_000, 1_000_000];
    for (x, s) in xs.iter().zip(shifted_sum_grid(&p, &xs)?) {
        let m = main_term(&p, *x as f64)?;
        println!("X={x:>8}: S {s:.6}, M {m:.6}, |S/M - 1| {:.3e}", (s / m - 1.0).norm());
    }
    let fit = residual_fit(&p, &xs)?;
    let e = theorem_exponents(p.u(), p.v());
    println!("residual slope {:.4}, error exponent {:.4}, main exponent {:.4}", fit.slope, e.error_exp, e.main_exp);

    for (a, b) in [(Ratio::new(1, 4), Ratio::new(1, 4)), (Ratio::new(1, 4), Ratio::new(-1, 4)), (Ratio::new(0, 1), Ratio::new(0, 1))] {
        let x = theorem_exponents_exact(a, b);
        println!(
            "Re u = {a}, Re v = {b}: alpha {}, error {}, main {}, ratio {}, gap {}",
            x.alpha, x.error_exp, x.main_exp, x.ratio, x.gap
        );
    }
    Ok(())
}
