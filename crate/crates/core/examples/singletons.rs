//! p̃(z) = 100(z² + 1) − z(z² − 0.25)²(z² − 1)² has singleton components at
//! 0.5 and 1: at those radii the positive real point briefly ties with the
//! negative one and immediately loses again.

use maxmod::constructor::with_even_part;
use maxmod::{detect_singletons, odd_product_t2, trace, AnnulusWindow};

fn main() -> maxmod::Result<()> {
    let p = with_even_part(&odd_product_t2(&[0.5, 1.0])?, 100.0);
    let set = trace(&p, &AnnulusWindow::new(0.25, 2.0, 2000)?)?;
    println!("{} components", set.components.len());
    for (r, theta) in detect_singletons(&set) {
        let res = set
            .components
            .iter()
            .find(|c| c.is_singleton && c.first().r == r)
            .and_then(|c| c.singleton_resolution)
            .unwrap_or(f64::NAN);
        println!("singleton at r = {r:.8}, θ = {theta:+.2e} (resolution {res:.1e})");
        println!(
            "  p̃(r) = {:.6}, p̃(−r) = {:.6}",
            p.eval_real(r),
            p.eval_real(-r)
        );
    }
    Ok(())
}
