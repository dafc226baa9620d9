//! `maxmod` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 monomial
//! input, 4 numerical failure.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::circlemax::Tolerances;
use crate::constructor::{build, certify_a, ConstructionKind, ConstructionSpec};
use crate::error::{Error, Result};
use crate::export::{read_csv, write_csv};
use crate::plot::render_svg;
use crate::poly::Polynomial;
use crate::tracer::{
    detect_discontinuities, detect_singletons, global_trace, trace_with, AnnulusWindow,
    GlobalOptions, MaxModSet, TraceOptions,
};
use crate::verify::{run_all, VerifyConfig};

pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_MONOMIAL: i32 = 3;
pub const EXIT_NUMERICAL: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "maxmod",
    version,
    about = "Maximum modulus sets of complex polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    T1,
    T2,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Trace the maximum modulus set over an annulus and write it as CSV.
    Trace {
        #[arg(long)]
        poly: PathBuf,
        #[arg(long, required_unless_present = "global")]
        rmin: Option<f64>,
        #[arg(long, required_unless_present = "global")]
        rmax: Option<f64>,
        #[arg(long, default_value_t = 2000)]
        steps: usize,
        #[arg(long)]
        out: PathBuf,
        /// Trace the whole plane through the reciprocal polynomial instead.
        #[arg(long)]
        global: bool,
        #[arg(long, default_value_t = 1.0)]
        r_split: f64,
        #[arg(long, default_value_t = Tolerances::default().value_tie)]
        value_tie: f64,
        #[arg(long, default_value_t = 3)]
        refine_levels: usize,
    },
    /// Build a certified polynomial with prescribed discontinuities (t1) or
    /// singleton components (t2).
    Construct {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        targets: Vec<f64>,
        #[arg(long)]
        out_poly: PathBuf,
        #[arg(long)]
        out_cert: PathBuf,
        #[arg(long, default_value_t = std::f64::consts::FRAC_PI_8)]
        theta0: f64,
    },
    /// Print the certificate for a given odd part and annulus.
    Certify {
        #[arg(long)]
        poly_hat: PathBuf,
        #[arg(long = "R")]
        r: f64,
        #[arg(long = "Rprime")]
        r_prime: f64,
        #[arg(long, default_value_t = std::f64::consts::FRAC_PI_8)]
        theta0: f64,
    },
    /// Run the seeded self-check suites.
    Verify {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Multiplies every pass threshold.
        #[arg(long, default_value_t = 1.0)]
        tol_scale: f64,
        /// Smaller suites for a quick smoke run.
        #[arg(long)]
        quick: bool,
    },
    /// Render a trace CSV as SVG.
    Plot {
        #[arg(long)]
        csv: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Monomial => EXIT_MONOMIAL,
        e if e.is_numerical() => EXIT_NUMERICAL,
        _ => EXIT_INVALID_INPUT,
    }
}

fn read_poly(path: &PathBuf) -> Result<Polynomial> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    Polynomial::from_json(&text)
}

fn write_file(path: &PathBuf, bytes: &[u8]) -> Result<()> {
    fs::write(path, bytes)
        .map_err(|e| Error::InvalidParameter(format!("cannot write {}: {e}", path.display())))
}

fn summarize(set: &MaxModSet, out: &mut dyn Write) -> Result<()> {
    let disc = detect_discontinuities(set);
    let moduli: Vec<String> = disc.iter().map(|d| format!("{:.6}", d.modulus)).collect();
    writeln!(out, "components: {}", set.components.len())?;
    writeln!(
        out,
        "discontinuities: {} [{}]",
        disc.len(),
        moduli.join(", ")
    )?;
    let singles: Vec<String> = detect_singletons(set)
        .iter()
        .map(|(r, t)| format!("({r:.6}, {t:.6})"))
        .collect();
    writeln!(
        out,
        "singletons: {} [{}]",
        singles.len(),
        singles.join(", ")
    )?;
    if !set.full_circle_radii.is_empty() {
        writeln!(out, "full-circle radii: {}", set.full_circle_radii.len())?;
    }
    Ok(())
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Trace {
            poly,
            rmin,
            rmax,
            steps,
            out: csv_path,
            global,
            r_split,
            value_tie,
            refine_levels,
        } => {
            let p = read_poly(&poly)?;
            let opts = TraceOptions {
                tolerances: Tolerances {
                    value_tie,
                    ..Tolerances::default()
                },
                refine_levels,
                ..TraceOptions::default()
            };
            let set = if global {
                global_trace(
                    &p,
                    &GlobalOptions {
                        r_split,
                        steps,
                        trace: opts,
                        ..GlobalOptions::default()
                    },
                )?
            } else {
                let window =
                    AnnulusWindow::new(rmin.unwrap_or_default(), rmax.unwrap_or_default(), steps)?;
                trace_with(&p, &window, &opts)?
            };
            let mut buf = Vec::new();
            write_csv(&set, &mut buf)?;
            write_file(&csv_path, &buf)?;
            summarize(&set, out)?;
        }
        Command::Construct {
            kind,
            targets,
            out_poly,
            out_cert,
            theta0,
        } => {
            let kind = match kind {
                Kind::T1 => ConstructionKind::T1,
                Kind::T2 => ConstructionKind::T2,
            };
            let spec = ConstructionSpec::with_theta0(kind, targets, theta0)?;
            let (p, cert) = build(&spec)?;
            write_file(&out_poly, p.to_json().as_bytes())?;
            let cert_json =
                serde_json::to_string_pretty(&cert).map_err(|e| Error::Parse(e.to_string()))?;
            write_file(&out_cert, cert_json.as_bytes())?;
            writeln!(out, "degree: {}", p.degree())?;
            writeln!(out, "a_cert: {:e}", cert.a_cert)?;
        }
        Command::Certify {
            poly_hat,
            r,
            r_prime,
            theta0,
        } => {
            let p_hat = read_poly(&poly_hat)?;
            let cert = certify_a(&p_hat, r, r_prime, theta0)?;
            let json =
                serde_json::to_string_pretty(&cert).map_err(|e| Error::Parse(e.to_string()))?;
            writeln!(out, "{json}")?;
        }
        Command::Verify {
            seed,
            tol_scale,
            quick,
        } => {
            let base = if quick {
                VerifyConfig::quick(seed)
            } else {
                VerifyConfig {
                    seed,
                    ..VerifyConfig::default()
                }
            };
            let cfg = VerifyConfig { tol_scale, ..base };
            let reports = run_all(&cfg);
            for r in &reports {
                writeln!(out, "{r}")?;
                for d in r.detail.iter().take(5) {
                    writeln!(out, "    {d}")?;
                }
            }
            if !reports.iter().all(|r| r.passed()) {
                return Ok(EXIT_VERIFY_FAILED);
            }
        }
        Command::Plot { csv, out: svg_path } => {
            let file = fs::File::open(&csv)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", csv.display())))?;
            let rows = read_csv(file)?;
            write_file(&svg_path, render_svg(&rows).as_bytes())?;
            writeln!(out, "wrote {} ({} points)", svg_path.display(), rows.len())?;
        }
    }
    Ok(0)
}

/// Parses `args` (program name first) and runs the command, writing the
/// summary to `out` and errors to stderr. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
