//! Command-line front end: argument parsing, configuration resolution,
//! check execution and report output.

mod args;
mod config;
mod demo;
mod output;
mod runner;

use std::fmt::Write;

use serde_json::json;

use nilcayley::backend::BackendSpec;
use nilcayley::dettheory::DetTheory;
use nilcayley::expr::parse_matrix;
use nilcayley::identities::VerificationReport;
use nilcayley::matpoly::render_matrix;
use nilcayley::ringcore::Ring;
use nilcayley::{with_ring, Error, Result};

pub use args::{CheckArg, Cli, Command, Format, MatrixArgs, VerifyArgs};
pub use config::{all_configs, RunConfig};
pub use output::report_text;
pub use runner::{exit_code, run_check, verify_all};

/// What the binary prints and its exit status.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(e: &Error) -> Self {
        Outcome {
            code: if matches!(e, Error::Internal(_)) { 1 } else { 2 },
            stdout: String::new(),
            stderr: format!("error: {e}"),
        }
    }
}

pub fn run(cli: Cli) -> Outcome {
    let result = match cli.command {
        Command::Verify(args) => verify(&args),
        Command::Charpoly(args) => charpoly(&args).map(Outcome::ok),
        Command::Sdet(args) => sdet(&args).map(Outcome::ok),
        Command::Adjoint(args) => adjoint(&args).map(Outcome::ok),
        Command::Demo => demo::run().map(Outcome::ok),
    };
    result.unwrap_or_else(|e| Outcome::error(&e))
}

/// JSON rendering of reports: a single object, or an array for `verify all`.
pub fn reports_json(reports: &[VerificationReport], single: bool) -> String {
    let value = if single {
        serde_json::to_value(&reports[0])
    } else {
        serde_json::to_value(reports)
    };
    serde_json::to_string_pretty(&value.expect("serializable")).expect("serializable")
}

fn verify(args: &VerifyArgs) -> Result<Outcome> {
    let (reports, single) = match config::check_id(args.check) {
        Some(check) => (vec![run_check(&RunConfig::from_args(check, args)?)?], true),
        None => {
            if args.backend.is_some() || args.matrix.is_some() || args.t.is_some() {
                return Err(Error::Precondition(
                    "`verify all` runs a fixed suite; only --seed, --trials, --slow, --format and --out apply".into(),
                ));
            }
            (verify_all(args.seed, args.trials, args.slow)?, false)
        }
    };
    let text = match args.format {
        Format::Json => reports_json(&reports, single),
        Format::Text => reports.iter().map(report_text).collect::<Vec<_>>().join("\n\n"),
    };
    let code = exit_code(&reports);
    match &args.out {
        Some(path) => {
            std::fs::write(path, format!("{text}\n")).map_err(|e| Error::Json(format!("{}: {e}", path.display())))?;
            Ok(Outcome {
                code,
                stdout: String::new(),
                stderr: String::new(),
            })
        }
        None => Ok(Outcome {
            code,
            stdout: text,
            stderr: String::new(),
        }),
    }
}

fn matrix_backend(args: &MatrixArgs) -> Result<(BackendSpec, nilcayley::backend::Backend)> {
    let spec: BackendSpec = args.backend.parse()?;
    let backend = spec.build()?;
    Ok((spec, backend))
}

fn sdet(args: &MatrixArgs) -> Result<String> {
    let (_, backend) = matrix_backend(args)?;
    let limits = config::limits(&args.caps);
    with_ring!(&backend, r => {
        let a = parse_matrix(&args.matrix, r, None)?;
        let d = r.render(&DetTheory::with_limits(r, limits).sdet(&a)?);
        Ok(match args.format {
            Format::Text => d,
            Format::Json => json!({ "backend": r.describe(), "n": a.size(), "sdet": d }).to_string(),
        })
    })
}

fn adjoint(args: &MatrixArgs) -> Result<String> {
    let (_, backend) = matrix_backend(args)?;
    let limits = config::limits(&args.caps);
    with_ring!(&backend, r => {
        let a = parse_matrix(&args.matrix, r, None)?;
        let dt = DetTheory::with_limits(r, limits);
        let m = match args.k {
            None => dt.sym_adjoint(&a)?,
            Some(k) => dt.radj(&a, k)?,
        };
        let rendered = render_matrix(r, &m);
        Ok(match args.format {
            Format::Text => rendered,
            Format::Json => json!({ "backend": r.describe(), "k": args.k, "adjoint": rendered }).to_string(),
        })
    })
}

fn charpoly(args: &MatrixArgs) -> Result<String> {
    let (spec, backend) = matrix_backend(args)?;
    let k = args
        .k
        .or(spec.lie_index())
        .ok_or_else(|| Error::Precondition(format!("pass --k: the Lie nilpotency index of {spec} is not known")))?;
    let limits = config::limits(&args.caps);
    with_ring!(&backend, r => {
        let a = parse_matrix(&args.matrix, r, None)?;
        let cp = DetTheory::with_limits(r, limits).char_poly(&a, k)?;
        let coeffs: Vec<String> = cp.coefficients.iter().map(|c| r.render(c)).collect();
        Ok(match args.format {
            Format::Json => json!({
                "backend": r.describe(),
                "n": cp.n,
                "k": cp.k,
                "degree": cp.degree(),
                "coefficients": coeffs,
            })
            .to_string(),
            Format::Text => {
                let mut s = String::new();
                for (i, c) in coeffs.iter().enumerate() {
                    let _ = writeln!(s, "lambda_{i} = {c}");
                }
                s.trim_end().to_string()
            }
        })
    })
}
