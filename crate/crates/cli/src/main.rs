//! `hecke`: Hilbert series predictions, brute-force dimensions and
//! cross-validation reports for Hecke symmetries.

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hecke_core::arith::parse_q_list;
use hecke_core::partitions::Partition;
use hecke_core::rmatrix::{self, HeckeSymmetry};
use hecke_core::series::{self, BirankCertificate, Positivity, RationalForm, TruncSeries};
use hecke_core::verify::{self, VerificationReport};
use hecke_core::{Error, ParseError};

const MACHINE_HELP: &str = "\
Machine output (--machine) is TAB-separated, one record per line. Each
report starts with '# suite<TAB>NAME<TAB>SUBJECT'; a report on a file-loaded
symmetry adds a '# conjectural ...' line. Every other line is a check:
NAME<TAB>COMPUTED<TAB>PREDICTED<TAB>true|false.

Exit codes: 0 all checks pass, 1 a check failed or detection was
inconclusive, 2 usage or parse error, 3 tensor size cap exceeded.";

#[derive(Parser)]
#[command(name = "hecke", version, about = "Exact Hilbert series of Hecke symmetries", after_help = MACHINE_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Predicted Hilbert series from a rational form or root lists.
    Predict(PredictArgs),
    /// Brute-force dimensions from an explicit symmetry.
    Compute(ComputeArgs),
    /// Run verification suites and report every check.
    #[command(after_help = MACHINE_HELP)]
    Verify(VerifyArgs),
    /// Power series utilities.
    #[command(subcommand)]
    Series(SeriesCommand),
}

#[derive(Clone, Copy, ValueEnum)]
enum Predicted {
    Sym,
    Ext,
    #[value(name = "A")]
    A,
    #[value(name = "E")]
    E,
}

#[derive(Args)]
struct PredictArgs {
    /// Symmetric-algebra series as "num;den", ascending coefficients.
    #[arg(long, allow_hyphen_values = true)]
    series: Option<String>,
    /// Reciprocal roots of the denominator f0, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    alphas: Option<String>,
    /// Reciprocal roots of f1, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    betas: Option<String>,
    /// Second symmetry for A and E, in the same forms.
    #[arg(long, allow_hyphen_values = true)]
    series2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    alphas2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    betas2: Option<String>,
    #[arg(long, default_value_t = 12)]
    degree: usize,
    #[arg(long, value_enum)]
    what: Predicted,
}

#[derive(Args)]
struct ComputeArgs {
    /// std:r=R,q=Q | super:R0,R1,q=Q | file:PATH
    #[arg(long)]
    symmetry: String,
    /// Largest degree for sym, ext, A and E.
    #[arg(long, default_value_t = 4)]
    degree: usize,
    /// sym | ext | quotient:[λ];[μ] | A:SPEC | E:SPEC, SPEC being the
    /// target symmetry.
    #[arg(long)]
    what: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Hilbert,
    Character,
    Homspace,
    Positivity,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    /// std:r=R,q=Q | super:R0,R1,q=Q | file:PATH
    #[arg(long)]
    symmetry: String,
    /// Target symmetry for the homspace suite; defaults to --symmetry.
    #[arg(long)]
    symmetry2: Option<String>,
    #[arg(long, default_value_t = 4)]
    nmax: usize,
    /// Largest weight scanned by the positivity suite.
    #[arg(long, default_value_t = 8)]
    max_weight: usize,
    /// TAB-separated records instead of tables.
    #[arg(long)]
    machine: bool,
}

#[derive(Subcommand)]
enum SeriesCommand {
    /// Find p/q with deg q <= rmax matching the coefficients.
    DetectRational {
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        /// Defaults to the largest r with N >= 2r + 2.
        #[arg(long)]
        rmax: Option<usize>,
    },
    /// The product (f ⋄ g)_n = Σ f(s_λ) g(s_λ). Inputs are padded with zeros.
    Diamond {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long, default_value_t = 12)]
        degree: usize,
    },
    /// Check f(s_λ) >= 0 for |λ| <= max-weight. Inputs are padded with zeros.
    TotalPositivity {
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long, default_value_t = 12)]
        max_weight: usize,
    },
}

enum Failure {
    Usage(String),
    Check(String),
    Cap(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Cap(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Check(m) | Failure::Cap(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::CapExceeded { .. } | Error::DegreeCap { .. } => Failure::Cap(msg),
            Error::HeckeViolation(_)
            | Error::BraidViolation(_)
            | Error::Inconclusive { .. }
            | Error::NotTotallyPositive { .. }
            | Error::NonIntegral(_)
            | Error::RootLocation { .. }
            | Error::BirankBound { .. }
            | Error::Internal(_) => Failure::Check(msg),
            _ => Failure::Usage(msg),
        }
    }
}

fn flag_error(flag: &str, e: ParseError) -> Failure {
    Failure::Usage(format!("{flag}: {e}"))
}

/// Lines printed on stdout and whether every check passed.
type Outcome = Result<(Vec<String>, bool), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Predict(a) => predict(a),
        Command::Compute(a) => compute(a),
        Command::Verify(a) => run_verify(a),
        Command::Series(c) => run_series(c),
    };
    match result {
        Ok((lines, ok)) => {
            let mut out = std::io::stdout().lock();
            // a reader that closes the pipe early only truncates the output
            let _ = lines.iter().try_for_each(|l| writeln!(out, "{l}")).and_then(|_| out.flush());
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn certificate(
    series: Option<&str>,
    alphas: Option<&str>,
    betas: Option<&str>,
    suffix: &str,
) -> Result<Option<BirankCertificate>, Failure> {
    match (series, alphas.is_some() || betas.is_some()) {
        (Some(_), true) => Err(Failure::Usage(format!(
            "--series{suffix} cannot be combined with --alphas{suffix}/--betas{suffix}"
        ))),
        (Some(s), false) => {
            let form: RationalForm = s.parse().map_err(|e| match e {
                Error::Parse(p) => flag_error(&format!("--series{suffix}"), p),
                other => Failure::Usage(format!("--series{suffix}: {other}")),
            })?;
            // H(t) = f1(-t) / f0(t)
            Ok(Some(BirankCertificate::from_polys(form.den, form.num.negate_var())?))
        }
        (None, true) => {
            let roots = |text: Option<&str>, flag: &str| {
                parse_q_list(text.unwrap_or("")).map_err(|e| flag_error(&format!("{flag}{suffix}"), e))
            };
            let a = roots(alphas, "--alphas")?;
            let b = roots(betas, "--betas")?;
            Ok(Some(BirankCertificate::from_roots(&a, &b)?))
        }
        (None, false) => Ok(None),
    }
}

fn certificate_lines(label: &str, cert: &BirankCertificate) -> Vec<String> {
    vec![
        format!("{label}f0 = {}; f1 = {}", cert.f0.to_list(), cert.f1.to_list()),
        format!("{label}birank ({}, {})", cert.r0, cert.r1),
        format!(
            "{label}roots: {}",
            if cert.roots_verified {
                "all real and positive (Sturm)"
            } else {
                "not all real and positive"
            }
        ),
    ]
}

fn predict(a: PredictArgs) -> Outcome {
    let cert = certificate(a.series.as_deref(), a.alphas.as_deref(), a.betas.as_deref(), "")?
        .ok_or_else(|| Failure::Usage("one of --series or --alphas/--betas is required".into()))?;
    let cert2 = certificate(a.series2.as_deref(), a.alphas2.as_deref(), a.betas2.as_deref(), "2")?;
    let n = a.degree;
    let need_second = || {
        cert2
            .as_ref()
            .ok_or_else(|| Failure::Usage("A and E need --series2 or --alphas2/--betas2".into()))
    };
    let result = match a.what {
        Predicted::Sym => cert.symmetric_series(n)?,
        Predicted::Ext => cert.exterior_series(n)?,
        Predicted::A => series::predict_a_series(&cert, need_second()?, n)?,
        Predicted::E => series::e_series_from_a(&series::predict_a_series(&cert, need_second()?, n)?)?,
    };
    let mut lines = vec![result.to_string()];
    let mut ok = cert.roots_verified;
    if matches!(a.what, Predicted::A | Predicted::E) {
        let c2 = need_second()?;
        lines.extend(certificate_lines("R: ", &cert));
        lines.extend(certificate_lines("R': ", c2));
        ok &= c2.roots_verified;
    } else {
        lines.extend(certificate_lines("", &cert));
    }
    Ok((lines, ok))
}

fn load_symmetry(spec: &str, flag: &str) -> Result<HeckeSymmetry, Failure> {
    if let Some(path) = spec.strip_prefix("file:") {
        let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{flag}: cannot read {path}: {e}")))?;
        return HeckeSymmetry::from_file_str(&text).map_err(|e| match e {
            Error::Parse(p) => Failure::Usage(format!("{path}: {p}")),
            other => Failure::from(other),
        });
    }
    rmatrix::parse_builtin(spec).map_err(|e| match e {
        Error::Parse(p) => flag_error(flag, p),
        other => Failure::from(other),
    })
}

fn join(dims: &[usize]) -> String {
    dims.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")
}

fn compute(a: ComputeArgs) -> Outcome {
    let r = load_symmetry(&a.symmetry, "--symmetry")?;
    let n = a.degree;
    let line = match a.what.as_str() {
        "sym" => join(&rmatrix::symmetric_dims(&r, n)?),
        "ext" => join(&rmatrix::exterior_dims(&r, n)?),
        what => {
            if let Some(body) = what.strip_prefix("quotient:") {
                let (lambda, mu) = parse_pair(body, "quotient:".len())?;
                rmatrix::dim_quotient(&r, &lambda, &mu)?.to_string()
            } else if let Some(spec) = what.strip_prefix("A:") {
                let r2 = load_symmetry(spec, "--what")?;
                let dims = (0..=n).map(|k| rmatrix::dim_intertwiner(&r2, &r, k)).collect::<Result<Vec<_>, _>>()?;
                join(&dims)
            } else if let Some(spec) = what.strip_prefix("E:") {
                let r2 = load_symmetry(spec, "--what")?;
                let dims = (0..=n).map(|k| rmatrix::dim_e_component(&r2, &r, k)).collect::<Result<Vec<_>, _>>()?;
                join(&dims)
            } else {
                return Err(Failure::Usage(format!(
                    "--what: expected sym, ext, quotient:[λ];[μ], A:SPEC or E:SPEC, found '{what}'"
                )));
            }
        }
    };
    Ok((vec![line], true))
}

/// Parses `[λ];[μ]` starting at byte `offset` of the flag value.
fn parse_pair(body: &str, offset: usize) -> Result<(Partition, Partition), Failure> {
    let Some(semi) = body.find(';') else {
        return Err(flag_error(
            "--what",
            ParseError::new(1, offset + body.len() + 1, "expected '[λ];[μ]'"),
        ));
    };
    let part = |text: &str, at: usize| {
        text.parse::<Partition>().map_err(|e| flag_error("--what", ParseError::new(1, e.column + at, e.message)))
    };
    Ok((part(&body[..semi], offset)?, part(&body[semi + 1..], offset + semi + 1)?))
}

fn run_verify(a: VerifyArgs) -> Outcome {
    let r = load_symmetry(&a.symmetry, "--symmetry")?;
    let r2 = match &a.symmetry2 {
        Some(spec) => load_symmetry(spec, "--symmetry2")?,
        None => r.clone(),
    };
    let wants = |s: Suite| a.suite == s || a.suite == Suite::All;
    let mut reports: Vec<VerificationReport> = Vec::new();
    if wants(Suite::Hilbert) {
        reports.push(verify::suite_hilbert(&r, a.nmax)?);
    }
    if wants(Suite::Character) {
        reports.push(verify::suite_character(&r, a.nmax)?);
    }
    if wants(Suite::Homspace) {
        reports.push(verify::suite_homspace(&r2, &r, a.nmax)?);
    }
    if wants(Suite::Positivity) {
        match verify::hilbert_data(&r, a.nmax)?.certificate {
            Ok(cert) => reports.push(verify::suite_positivity(&cert, a.max_weight)?),
            Err(msg) => {
                let mut rep = VerificationReport::new("positivity", r.to_string(), r.conjectural());
                rep.record("certificate", format!("error: {msg}"), "birank certificate", false);
                reports.push(rep);
            }
        }
    }
    let ok = reports.iter().all(VerificationReport::passed);
    let mut lines = Vec::new();
    for (i, rep) in reports.iter().enumerate() {
        let text = if a.machine {
            rep.render_machine()
        } else {
            if i > 0 {
                lines.push(String::new());
            }
            rep.render_table()
        };
        lines.extend(text.lines().map(str::to_string));
    }
    Ok((lines, ok))
}

fn parse_series(text: &str, flag: &str) -> Result<TruncSeries, Failure> {
    TruncSeries::parse(text).map_err(|e| flag_error(flag, e))
}

fn run_series(c: SeriesCommand) -> Outcome {
    match c {
        SeriesCommand::DetectRational { coeffs, rmax } => {
            let f = parse_series(&coeffs, "--coeffs")?;
            let order = f.order();
            let r_max = rmax.unwrap_or(order.saturating_sub(2) / 2);
            match series::detect_rational(&f, r_max) {
                Some(form) => Ok((
                    vec![form.to_string(), format!("certificate relative to truncation order {order}")],
                    true,
                )),
                None => Ok((
                    vec![format!(
                        "inconclusive: no rational form with denominator degree <= {r_max} at truncation order {order}"
                    )],
                    false,
                )),
            }
        }
        SeriesCommand::Diamond { f, g, degree } => {
            let f = parse_series(&f, "--f")?.pad(degree).truncate(degree)?;
            let g = parse_series(&g, "--g")?.pad(degree).truncate(degree)?;
            Ok((vec![series::diamond(&f, &g, degree)?.to_string()], true))
        }
        SeriesCommand::TotalPositivity { coeffs, max_weight } => {
            let f = parse_series(&coeffs, "--coeffs")?.pad(max_weight);
            match series::total_positivity(&f, max_weight)? {
                Positivity::Holds => Ok((vec![format!("totally positive through weight {max_weight}")], true)),
                Positivity::Violation(lambda, v) => Ok((
                    vec![format!("violation at {lambda}: {}", hecke_core::arith::fmt_q(&v))],
                    false,
                )),
            }
        }
    }
}
