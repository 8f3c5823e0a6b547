//! Growth exponents of the spectral pieces on vertical lines.

use num_complex::Complex64;
use shiftconv::divsum::ConvolutionParams;
use shiftconv::spectral::{geometric_grid, vertical_growth_fit, GrowthComponent};

fn main() -> shiftconv::error::Result<()> {
    let p = ConvolutionParams::default_config();
    let pv = p.with_uv(Complex64::new(0.2, 0.1), Complex64::new(0.1, 0.05))?;
    let cases = [
        (GrowthComponent::R, &p, "bounded"),
        (GrowthComponent::V, &pv, "1/2 + max Re(u,v) = 0.7"),
        (GrowthComponent::Cont, &p, "at most 1.2"),
        (GrowthComponent::LkStar { terms: 20_000 }, &p, "absolutely convergent"),
    ];
    for (component, params, expect) in cases {
        let (sigma, lo, hi) = component.default_line();
        let ts = geometric_grid(lo, hi, 16)?;
        let f = vertical_growth_fit(component, params, sigma, &ts)?;
        println!(
            "{:>7} on Re s = {sigma}: slope {:+.4} (rms {:.1e}, {} dropped), expected {expect}",
            component.name(),
            f.slope,
            f.rms_residual,
            f.dropped.len()
        );
    }
    Ok(())
}
