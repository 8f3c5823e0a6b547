//! Save a sieved σ table in the SGT1 binary format and read it back.

use num_complex::Complex64;
use shiftconv::chars::DirichletCharacter;
use shiftconv::divsum::{sieve_sigma, SigmaTable};

fn main() -> shiftconv::error::Result<()> {
    let chi = DirichletCharacter::new(7, 2)?;
    let table = sieve_sigma(Complex64::new(0.2, 0.1), &chi, 10_000)?;
    let dir = std::env::temp_dir().join(format!("shiftconv-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("sigma.sgt");
    table.save(&path)?;
    let bytes = std::fs::metadata(&path)?.len();
    let back = SigmaTable::load(&path)?;
    println!("{} entries, {bytes} bytes, exponent {}, chi_{} mod {}", back.values().len(), back.exponent(), back.character().index(), back.character().modulus());
    println!("identical after round trip: {}", back.values() == table.values());
    println!("sigma(9999) = {}", back.get(9999));
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
