//! Discontinuities over the whole plane: the inside of the unit disc is traced
//! directly and the outside through the reciprocal polynomial z⁷ p(1/z).

use maxmod::constructor::with_even_part;
use maxmod::tracer::GlobalOptions;
use maxmod::{global_discontinuities, odd_product_t1};

fn main() -> maxmod::Result<()> {
    let p = with_even_part(&odd_product_t1(&[0.5, 1.0, 2.0])?, 1000.0);
    for steps in [2000, 4000] {
        let found = global_discontinuities(
            &p,
            &GlobalOptions {
                steps,
                ..Default::default()
            },
        )?;
        let moduli: Vec<String> = found.iter().map(|d| format!("{:.5}", d.modulus)).collect();
        println!(
            "{steps} steps: {} discontinuities [{}]",
            found.len(),
            moduli.join(", ")
        );
    }
    Ok(())
}
