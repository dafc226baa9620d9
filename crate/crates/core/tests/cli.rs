use std::path::Path;
use std::process::Command;

use maxmod::cli::{run, EXIT_INVALID_INPUT, EXIT_MONOMIAL, EXIT_VERIFY_FAILED};
use maxmod::Polynomial;

fn maxmod(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut argv = vec!["maxmod"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out);
    (code, String::from_utf8(out).unwrap())
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_owned()
}

const DISC_EXAMPLE: &str = r#"{"coeffs": [1000, -1, 1000, 5.25, 0, -5.25, 0, 1]}"#;

#[test]
fn trace_example_summary_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let poly = path(dir.path(), "p.json");
    std::fs::write(&poly, DISC_EXAMPLE).unwrap();
    let csv = path(dir.path(), "p.csv");
    let (code, out) = maxmod(&[
        "trace", "--poly", &poly, "--rmin", "0.25", "--rmax", "4", "--steps", "2000", "--out", &csv,
    ]);
    assert_eq!(code, 0);
    let line = out
        .lines()
        .find(|l| l.starts_with("discontinuities"))
        .unwrap();
    for m in ["0.500000", "1.000000", "2.000000"] {
        assert!(line.contains(m), "{line}");
    }
    let text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(
        text.lines().next().unwrap(),
        "component_id,r,theta,x,y,modulus_value,censored_inner,censored_outer,is_singleton"
    );
}

#[test]
fn trace_quadratic_has_no_discontinuities() {
    let dir = tempfile::tempdir().unwrap();
    let poly = path(dir.path(), "q.json");
    std::fs::write(&poly, r#"{"coeffs": [1, 0, 1]}"#).unwrap();
    let (code, out) = maxmod(&[
        "trace",
        "--poly",
        &poly,
        "--rmin",
        "0.5",
        "--rmax",
        "2",
        "--steps",
        "100",
        "--out",
        &path(dir.path(), "q.csv"),
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("components: 2"));
    assert!(out.contains("discontinuities: 0"));
}

#[test]
fn trace_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let poly = path(dir.path(), "p.json");
    std::fs::write(
        &poly,
        r#"{"coeffs": [[0.3, -0.2], [1, 0.5], [-0.7, 0], [0.2, 0.9]]}"#,
    )
    .unwrap();
    let mut outputs = Vec::new();
    for name in ["a.csv", "b.csv"] {
        let csv = path(dir.path(), name);
        assert_eq!(
            maxmod(&[
                "trace", "--poly", &poly, "--rmin", "0.3", "--rmax", "3", "--steps", "400",
                "--out", &csv
            ])
            .0,
            0
        );
        outputs.push(std::fs::read(&csv).unwrap());
    }
    assert_eq!(outputs[0], outputs[1]);
}

#[test]
fn construct_reports_degree_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let (poly, cert) = (path(dir.path(), "p.json"), path(dir.path(), "c.json"));
    let (code, out) = maxmod(&[
        "construct",
        "--kind",
        "t1",
        "--targets",
        "0.5,1,2",
        "--out-poly",
        &poly,
        "--out-cert",
        &cert,
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("degree: 7"));
    let (p, _) = maxmod::build(
        &maxmod::ConstructionSpec::new(maxmod::ConstructionKind::T1, vec![0.5, 1.0, 2.0]).unwrap(),
    )
    .unwrap();
    let parsed = Polynomial::from_json(&std::fs::read_to_string(&poly).unwrap()).unwrap();
    let bits = |q: &Polynomial| {
        q.coeffs()
            .iter()
            .map(|c| (c.re.to_bits(), c.im.to_bits()))
            .collect::<Vec<_>>()
    };
    assert_eq!(bits(&parsed), bits(&p));
    let cert_json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    for key in [
        "theta0",
        "alpha",
        "K_bound",
        "R",
        "R_prime",
        "beta1_bound",
        "beta2_bound",
        "a_first",
        "a_station",
        "a_concave",
        "a_cert",
    ] {
        assert!(cert_json.get(key).is_some(), "missing {key}");
    }

    let (code, out) = maxmod(&[
        "construct",
        "--kind",
        "t2",
        "--targets",
        "0.5,1",
        "--out-poly",
        &poly,
        "--out-cert",
        &cert,
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("degree: 9"));
}

#[test]
fn certify_prints_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let poly = path(dir.path(), "phat.json");
    std::fs::write(&poly, r#"{"coeffs": [0, -1, 0, 1]}"#).unwrap();
    let (code, out) = maxmod(&[
        "certify",
        "--poly-hat",
        &poly,
        "--R",
        "0.5",
        "--Rprime",
        "2",
        "--theta0",
        "0.3",
    ]);
    assert_eq!(code, 0);
    let cert: maxmod::Certificate = serde_json::from_str(&out).unwrap();
    assert_eq!(cert.theta0, 0.3);
    assert!(cert.a_cert > cert.a_first.max(cert.a_station).max(cert.a_concave));
}

#[test]
fn error_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let mono = path(dir.path(), "z3.json");
    std::fs::write(&mono, r#"{"coeffs": [0, 0, 0, 1]}"#).unwrap();
    let out = path(dir.path(), "x.csv");
    assert_eq!(
        maxmod(&["trace", "--poly", &mono, "--rmin", "1", "--rmax", "2", "--out", &out]).0,
        EXIT_MONOMIAL
    );
    let garbage = path(dir.path(), "bad.json");
    std::fs::write(&garbage, "{not json").unwrap();
    assert_eq!(
        maxmod(&["trace", "--poly", &garbage, "--rmin", "1", "--rmax", "2", "--out", &out]).0,
        EXIT_INVALID_INPUT
    );
    assert_eq!(
        maxmod(&[
            "trace",
            "--poly",
            &path(dir.path(), "missing.json"),
            "--rmin",
            "1",
            "--rmax",
            "2",
            "--out",
            &out
        ])
        .0,
        EXIT_INVALID_INPUT
    );
    assert_eq!(
        maxmod(&[
            "construct",
            "--kind",
            "t1",
            "--targets",
            "1,1",
            "--out-poly",
            &out,
            "--out-cert",
            &out
        ])
        .0,
        EXIT_INVALID_INPUT
    );
    assert_eq!(
        maxmod(&[
            "plot",
            "--csv",
            &path(dir.path(), "none.csv"),
            "--out",
            &out
        ])
        .0,
        EXIT_INVALID_INPUT
    );
    assert_eq!(maxmod(&["trace", "--poly", &mono]).0, EXIT_INVALID_INPUT);
}

#[test]
fn verify_quick_passes_and_zero_tolerance_fails() {
    let (code, out) = maxmod(&["verify", "--quick", "--seed", "3"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().filter(|l| l.contains(" PASS ")).count(), 5);
    let (code, _) = maxmod(&["verify", "--quick", "--tol-scale", "0"]);
    assert_eq!(code, EXIT_VERIFY_FAILED);
}

#[test]
fn plot_marks_singletons() {
    let dir = tempfile::tempdir().unwrap();
    let poly = path(dir.path(), "pt.json");
    let pt =
        maxmod::constructor::with_even_part(&maxmod::odd_product_t2(&[0.5, 1.0]).unwrap(), 100.0);
    std::fs::write(&poly, pt.to_json()).unwrap();
    let (csv, svg) = (path(dir.path(), "pt.csv"), path(dir.path(), "pt.svg"));
    assert_eq!(
        maxmod(&["trace", "--poly", &poly, "--rmin", "0.25", "--rmax", "2", "--out", &csv]).0,
        0
    );
    assert_eq!(maxmod(&["plot", "--csv", &csv, "--out", &svg]).0, 0);
    let text = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(text.matches(r#"class="singleton""#).count(), 2);
}

#[test]
fn binary_exit_code_contract() {
    let bin = env!("CARGO_BIN_EXE_maxmod");
    let dir = tempfile::tempdir().unwrap();
    let mono = path(dir.path(), "z.json");
    std::fs::write(&mono, r#"{"coeffs": [0, 2]}"#).unwrap();
    let status = Command::new(bin)
        .args([
            "trace",
            "--poly",
            &mono,
            "--rmin",
            "1",
            "--rmax",
            "2",
            "--out",
            &path(dir.path(), "o.csv"),
        ])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(EXIT_MONOMIAL));
    let status = Command::new(bin)
        .args(["construct", "--kind", "t3"])
        .output()
        .unwrap()
        .status;
    assert_eq!(status.code(), Some(EXIT_INVALID_INPUT));
}
