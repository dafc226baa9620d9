use std::f64::consts::PI;

use maxmod::constructor::{
    expected_case, verify_trichotomy, with_even_part, ConstructionKind, SignCase,
};
use maxmod::{
    build, certify_a, detect_discontinuities, detect_singletons, odd_product_t1, odd_product_t2,
    trace, AnnulusWindow, ConstructionSpec, Tolerances,
};
use num_complex::Complex64;

#[test]
fn upward_closure() {
    for (kind, targets) in [
        (ConstructionKind::T1, vec![0.5, 1.0, 2.0]),
        (ConstructionKind::T2, vec![0.5, 1.0]),
    ] {
        let spec = ConstructionSpec::new(kind, targets).unwrap();
        let (_, cert) = build(&spec).unwrap();
        let p_hat = spec.p_hat().unwrap();
        for factor in [1.0, 2.0, 10.0, 100.0] {
            let rep = verify_trichotomy(
                &p_hat,
                factor * cert.a_cert,
                cert.r,
                cert.r_prime,
                300,
                &Tolerances::default(),
            )
            .unwrap();
            assert!(
                rep.passed(),
                "{kind:?} at {factor}x: {:?}",
                rep.mismatches.first()
            );
        }
    }
}

#[test]
fn first_claim_margin() {
    let spec = ConstructionSpec::new(ConstructionKind::T1, vec![0.5, 1.0, 2.0]).unwrap();
    let (p, cert) = build(&spec).unwrap();
    for i in 0..=40 {
        let r = cert.r + (cert.r_prime - cert.r) * i as f64 / 40.0;
        let on_axis = p.eval_real(r).abs();
        for j in 0..=20 {
            let theta = cert.theta0 + (PI / 2.0 - cert.theta0) * j as f64 / 20.0;
            for t in [theta, -theta] {
                assert!(
                    on_axis > p.eval(Complex64::from_polar(r, t)).norm(),
                    "r = {r}, θ = {t}"
                );
            }
        }
    }
}

#[test]
fn certificate_fields() {
    let p_hat = odd_product_t1(&[0.5, 1.0, 2.0]).unwrap();
    let cert = certify_a(&p_hat, 0.25, 4.0, PI / 8.0).unwrap();
    assert!(cert.alpha > 0.0 && (cert.alpha - (1.0 - (PI / 4.0).cos())).abs() < 1e-15);
    // Σ|ĉ_k| 4^k for z⁷ − 5.25z⁵ + 5.25z³ − z.
    assert_eq!(cert.k_bound, 16384.0 + 5.25 * 1024.0 + 5.25 * 64.0 + 4.0);
    assert!(
        cert.a_cert > cert.a_first && cert.a_cert > cert.a_station && cert.a_cert > cert.a_concave
    );
    assert_eq!(
        cert.a_cert,
        2.0 * cert.a_first.max(cert.a_station).max(cert.a_concave)
    );
    // a_first alone is the claim from the proof: 2K(R² + 1)/(αR²).
    assert!(
        (cert.a_first - 2.0 * cert.k_bound * (0.0625 + 1.0) / (cert.alpha * 0.0625)).abs()
            <= 1e-9 * cert.a_first
    );
    assert!(certify_a(&p_hat, 0.25, 4.0, PI / 4.0).is_err());
    assert!(certify_a(&p_hat, 4.0, 0.25, PI / 8.0).is_err());
}

#[test]
fn cubic_has_one_discontinuity() {
    let (p, cert) =
        build(&ConstructionSpec::new(ConstructionKind::T1, vec![1.0]).unwrap()).unwrap();
    assert_eq!(p.degree(), 3);
    let set = trace(&p, &AnnulusWindow::new(cert.r, cert.r_prime, 2000).unwrap()).unwrap();
    let d = detect_discontinuities(&set);
    assert_eq!(d.len(), 1);
    assert!((d[0].modulus - 1.0).abs() < 1e-3);
}

#[test]
fn t2_has_singletons_at_targets() {
    let (p, cert) =
        build(&ConstructionSpec::new(ConstructionKind::T2, vec![0.5, 1.0]).unwrap()).unwrap();
    assert_eq!(p.degree(), 9);
    let set = trace(&p, &AnnulusWindow::new(cert.r, cert.r_prime, 2000).unwrap()).unwrap();
    let singles = detect_singletons(&set);
    assert_eq!(singles.len(), 2);
    for ((r, theta), want) in singles.iter().zip([0.5, 1.0]) {
        assert!((r - want).abs() < 1e-3 && theta.abs() < 1e-9);
    }
}

#[test]
fn sign_case_zero_at_every_target() {
    let t1 = odd_product_t1(&[0.5, 1.0, 2.0]).unwrap();
    let t2 = odd_product_t2(&[0.5, 1.0]).unwrap();
    for a in [0.5, 1.0, 2.0] {
        assert_eq!(expected_case(&t1, a).unwrap(), SignCase::Both);
    }
    for a in [0.5, 1.0] {
        assert_eq!(expected_case(&t2, a).unwrap(), SignCase::Both);
    }
    assert_eq!(expected_case(&t1, 0.25).unwrap(), SignCase::NegOnly);
    assert_eq!(expected_case(&t1, 3.0).unwrap(), SignCase::PosOnly);
}

#[test]
fn even_part_is_added() {
    let p = with_even_part(&odd_product_t1(&[1.0]).unwrap(), 7.0);
    assert_eq!(p.real_coeffs(), vec![7.0, -1.0, 7.0, 1.0]);
}
