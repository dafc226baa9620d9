//! Circle maxima of the three-discontinuity example
//! p(z) = 1000(z² + 1) + z(z² − 0.25)(z² − 1)(z² − 4) at a few radii, next to
//! a brute-force grid search.

use maxmod::circlemax::{scan_circle, StationaryKind, Tolerances};
use maxmod::constructor::with_even_part;
use maxmod::oracle::grid_maximizers;
use maxmod::{global_maximizers, odd_product_t1};

fn main() -> maxmod::Result<()> {
    let p = with_even_part(&odd_product_t1(&[0.5, 1.0, 2.0])?, 1000.0);
    println!("p(z) = {p}");
    println!(
        "{:>6} {:>16} {:>28} {:>16}",
        "r", "M(r)", "maximizers", "grid M(r)"
    );
    for r in [0.3, 0.5, 0.75, 1.5, 2.0, 3.0] {
        let m = global_maximizers(&p, r)?;
        let (grid, _) = grid_maximizers(&p, r, 20_000, 1e-12);
        let angles: Vec<String> = m.angles.iter().map(|a| format!("{a:.6}")).collect();
        println!(
            "{r:>6} {:>16.6} {:>28} {grid:>16.6}",
            m.value,
            angles.join(" ")
        );
    }

    // Every stationary angle of |p| on one circle, classified.
    let scan = scan_circle(&p, 3.0, &Tolerances::default())?;
    println!("\nstationary points on |z| = 3:");
    for s in &scan.stationary {
        let kind = match s.kind {
            StationaryKind::Max => "max",
            StationaryKind::Min => "min",
            StationaryKind::Flat => "flat",
        };
        println!("  θ = {:>10.6}  |p| = {:>12.4}  {kind}", s.theta, s.modulus);
    }
    Ok(())
}
