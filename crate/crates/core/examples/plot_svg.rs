//! Renders the two-target examples to SVG (default: the system temp dir).

use maxmod::constructor::with_even_part;
use maxmod::export::rows;
use maxmod::plot::render_svg;
use maxmod::{odd_product_t1, odd_product_t2, trace, AnnulusWindow};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args()
        .nth(1)
        .map(Into::into)
        .unwrap_or_else(std::env::temp_dir);
    let p = with_even_part(&odd_product_t1(&[0.5, 1.0, 2.0])?, 1000.0);
    let pt = with_even_part(&odd_product_t2(&[0.5, 1.0])?, 100.0);
    for (name, poly, rmax) in [("discontinuities.svg", p, 4.0), ("singletons.svg", pt, 2.0)] {
        let set = trace(&poly, &AnnulusWindow::new(0.25, rmax, 2000)?)?;
        let path = dir.join(name);
        std::fs::write(&path, render_svg(&rows(&set)))?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
