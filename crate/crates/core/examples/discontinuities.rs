//! Traces p(z) = 1000(z² + 1) + z(z² − 0.25)(z² − 1)(z² − 4) on 0.25 ≤ |z| ≤ 4
//! and lists the components and their inner endpoints.
//!
//! Pass a path to also write the trace as CSV.

use maxmod::constructor::with_even_part;
use maxmod::export::write_csv;
use maxmod::{detect_discontinuities, odd_product_t1, trace, AnnulusWindow};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = with_even_part(&odd_product_t1(&[0.5, 1.0, 2.0])?, 1000.0);
    let set = trace(&p, &AnnulusWindow::new(0.25, 4.0, 2000)?)?;
    for (i, c) in set.components.iter().enumerate() {
        println!(
            "component {i}: |z| in [{:.6}, {:.6}], θ starts at {:+.6}, {} points{}{}",
            c.min_modulus,
            c.max_modulus,
            c.first().theta,
            c.points.len(),
            if c.censored_inner {
                ", censored inside"
            } else {
                ""
            },
            if c.censored_outer {
                ", censored outside"
            } else {
                ""
            },
        );
    }
    for d in detect_discontinuities(&set) {
        println!(
            "discontinuity of modulus {:.6} at θ = {:+.6}",
            d.modulus, d.location.1
        );
    }
    if let Some(path) = std::env::args().nth(1) {
        write_csv(&set, std::fs::File::create(&path)?)?;
        println!("wrote {path}");
    }
    Ok(())
}
