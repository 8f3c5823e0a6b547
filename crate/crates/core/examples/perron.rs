//! Truncated Perron integral of L_k* against the partial sum of its
//! coefficients, for a ladder of heights.

use shiftconv::divsum::ConvolutionParams;
use shiftconv::spectral::perron_demo;

fn main() -> shiftconv::error::Result<()> {
    let p = ConvolutionParams::default_config();
    let x = 50.5;
    for t in [125.0, 250.0, 500.0, 1000.0] {
        let d = perron_demo(&p, x, t, 20_000)?;
        println!(
            "T={t:>6}: integral {:.6}, 2πi·partial sum {:.6}, |difference| {:.4} ({} nodes on Re s = {:.2})",
            d.integral,
            d.perron_sum,
            d.difference.norm(),
            d.nodes,
            d.line
        );
    }
    Ok(())
}
