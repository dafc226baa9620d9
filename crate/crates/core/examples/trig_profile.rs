//! |p(re^{iθ})|² as a trigonometric polynomial in θ, checked against direct
//! evaluation.

use maxmod::oracle::power_sum_eval;
use maxmod::Polynomial;
use num_complex::Complex64;

fn main() -> maxmod::Result<()> {
    let p = Polynomial::from_json(r#"{"coeffs": [[1, 0.5], [-2, 0], [0, 1], [0.25, -0.75]]}"#)?;
    let r = 1.3;
    let t = p.trig_profile(r);
    println!("p(z) = {p}, r = {r}");
    println!("c0 = {:.6}", t.c0);
    for m in 1..=t.harmonics() {
        println!(
            "m = {m}: cos {:>10.6}  sin {:>10.6}",
            t.cos_coeff(m),
            t.sin_coeff(m)
        );
    }
    for theta in [0.0, 0.7, 2.0, -2.9] {
        let direct = power_sum_eval(&p, Complex64::from_polar(r, theta)).norm_sqr();
        println!(
            "θ = {theta:>5}: series {:.12}  direct {direct:.12}",
            t.eval(theta)
        );
    }
    Ok(())
}
