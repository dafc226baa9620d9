//! Builds certified polynomials with discontinuities (T1) and singleton
//! components (T2) at chosen moduli, checks the real-axis trichotomy on the
//! certified annulus and traces the result.

use maxmod::constructor::{verify_trichotomy, ConstructionKind};
use maxmod::{
    build, detect_discontinuities, detect_singletons, trace, AnnulusWindow, ConstructionSpec,
    Tolerances,
};

fn main() -> maxmod::Result<()> {
    for (kind, targets) in [
        (ConstructionKind::T1, vec![0.5, 1.0, 2.0]),
        (ConstructionKind::T2, vec![0.5, 1.0]),
        (ConstructionKind::T1, vec![1.0]),
    ] {
        let spec = ConstructionSpec::new(kind, targets.clone())?;
        let (p, cert) = build(&spec)?;
        println!(
            "{kind:?} {targets:?}: degree {}, a = {:.6e}",
            p.degree(),
            cert.a_cert
        );
        println!(
            "  K ≤ {:.4e}, a_first {:.4e}, a_station {:.4e}, a_concave {:.4e}",
            cert.k_bound, cert.a_first, cert.a_station, cert.a_concave
        );
        let report = verify_trichotomy(
            &spec.p_hat()?,
            cert.a_cert,
            cert.r,
            cert.r_prime,
            500,
            &Tolerances::default(),
        )?;
        println!(
            "  trichotomy on [{}, {}]: {} of {} radii mismatch",
            cert.r,
            cert.r_prime,
            report.mismatches.len(),
            report.radii_checked
        );
        let set = trace(&p, &AnnulusWindow::new(cert.r, cert.r_prime, 2000)?)?;
        let moduli: Vec<String> = detect_discontinuities(&set)
            .iter()
            .map(|d| format!("{:.5}", d.modulus))
            .collect();
        println!(
            "  discontinuities [{}], singletons {}",
            moduli.join(", "),
            detect_singletons(&set).len()
        );
    }
    Ok(())
}
