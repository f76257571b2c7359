//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage error.

mod format;
mod svg;
mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::algebra::RepLabel;
use crate::error::Error;
use crate::numerics::{matmul, max_abs_diff, Matrix};
use crate::oscillator::{build_u, comparison_spectra, cp_transform, wavefunction, Picture, SpectrumModel};

pub use format::{number, unsigned_zero};
pub use verify::{run_verification, VerifyOptions, VerifyReport};

/// Unitarity gate applied to the transform before it is written.
pub const TRANSFORM_GATE: f64 = 1e-12;

#[derive(Debug, Parser)]
#[command(
    name = "su2cp",
    version,
    about = "Finite su(2)_CP oscillator: spectra, wavefunctions, transform, verification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Position spectrum of the su2, sl21 and su2cp models.
    Spectrum(SpectrumArgs),
    /// Energy eigenstates sampled on the position or momentum grid.
    Wavefunction(WavefunctionArgs),
    /// The CP Krawtchouk transform matrix.
    Transform(TransformArgs),
    /// Run every identity and spectral check and emit a JSON report.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelChoice {
    Su2,
    Sl21,
    Su2cp,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PictureChoice {
    Position,
    Momentum,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Write here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[arg(long)]
    pub j: u32,
    #[arg(long, value_enum, default_value = "all")]
    pub model: ModelChoice,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct WavefunctionArgs {
    #[arg(long)]
    pub j: u32,
    /// Energy level `0 <= n <= 2j`; repeat for several tables.
    #[arg(long = "n", required = true)]
    pub n: Vec<usize>,
    #[arg(long, value_enum, default_value = "position")]
    pub picture: PictureChoice,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    #[arg(long)]
    pub j: u32,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 30)]
    pub j_max: u32,
    #[arg(long, default_value_t = 15)]
    pub exact_j_max: u32,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    /// Write the JSON report here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Perturb the off-diagonal entry M_k of every position matrix by +1.
    #[arg(long, hide = true, value_name = "K")]
    pub debug_corrupt_mk: Option<usize>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Check(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Check(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Check(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(_) | Error::InvalidLabel(_) | Error::Shape(_) => Failure::Usage(e.to_string()),
            _ => Failure::Check(e.to_string()),
        }
    }
}

fn emit(body: &str, path: &Option<PathBuf>, stdout: &mut dyn Write) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, body).map_err(|e| Failure::Check(format!("cannot write {}: {e}", p.display()))),
        None => stdout.write_all(body.as_bytes()).map_err(|e| Failure::Check(format!("cannot write output: {e}"))),
    }
}

fn json_text(value: &serde_json::Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    text
}

fn cmd_spectrum(args: &SpectrumArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let rep = RepLabel::new(args.j);
    let models: Vec<SpectrumModel> = match args.model {
        ModelChoice::Su2 => vec![SpectrumModel::Su2],
        ModelChoice::Sl21 => vec![SpectrumModel::Sl21],
        ModelChoice::Su2cp => vec![SpectrumModel::Su2Cp],
        ModelChoice::All => SpectrumModel::ALL.to_vec(),
    };
    let rows: Vec<(&str, Vec<f64>)> = models.iter().map(|&m| (m.tag(), comparison_spectra(m, rep))).collect();
    let body = match args.out.format {
        Format::Csv => format::spectrum_csv(&rows),
        Format::Json => json_text(&format::spectrum_json(args.j, &rows)),
        Format::Svg => svg::spectrum(&rows),
    };
    emit(&body, &args.out.output, stdout)
}

fn cmd_wavefunction(args: &WavefunctionArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let rep = RepLabel::new(args.j);
    let max = rep.dim() - 1;
    if let Some(&n) = args.n.iter().find(|&&n| n > max) {
        return Err(Failure::Usage(format!("--n {n} out of range: j = {} allows 0..={max}", args.j)));
    }
    let picture = match args.picture {
        PictureChoice::Position => Picture::Position,
        PictureChoice::Momentum => Picture::Momentum,
    };
    let data = build_u(rep)?;
    let tables = args.n.iter().map(|&n| wavefunction(&data, n, picture)).collect::<Result<Vec<_>, _>>()?;
    let body = match args.out.format {
        Format::Csv => format::wavefunction_csv(&tables),
        Format::Json => json_text(&format::wavefunction_json(args.j, &tables)),
        Format::Svg => svg::wavefunctions(&tables),
    };
    emit(&body, &args.out.output, stdout)
}

fn cmd_transform(args: &TransformArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    if args.out.format == Format::Svg {
        return Err(Failure::Usage("svg output is only available for spectrum and wavefunction".into()));
    }
    let data = build_u(RepLabel::new(args.j))?;
    let k = cp_transform(&data);
    let gram = matmul(&k.adjoint(), &k)?;
    let residual = max_abs_diff(&gram, &Matrix::<Complex64>::identity(k.rows()))?;
    if !(residual < TRANSFORM_GATE) {
        return Err(Failure::Check(format!("transform unitarity: residual {residual:e} >= {TRANSFORM_GATE:e}")));
    }
    let body = match args.out.format {
        Format::Json => json_text(&format::matrix_json(&k)),
        _ => format::matrix_csv(&k),
    };
    emit(&body, &args.out.output, stdout)
}

fn cmd_verify(args: &VerifyArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), Failure> {
    if args.j_max < 1 {
        return Err(Failure::Usage("--j-max must be at least 1".into()));
    }
    if !(args.tol > 0.0) {
        return Err(Failure::Usage("--tol must be positive".into()));
    }
    let options = VerifyOptions {
        j_max: args.j_max,
        exact_j_max: args.exact_j_max,
        tol: args.tol,
        corrupt_mk: args.debug_corrupt_mk,
    };
    let report = run_verification(&options)?;
    let body = serde_json::to_string_pretty(&report).expect("serializable") + "\n";
    emit(&body, &args.output, stdout)?;
    if report.passed {
        Ok(())
    } else {
        for name in &report.failures {
            let _ = writeln!(stderr, "FAILED: {name}");
        }
        Err(Failure::Check(format!("{} check(s) failed", report.failures.len())))
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                2
            } else {
                let _ = stdout.write_all(text.as_bytes());
                0
            };
        }
    };
    let outcome = match &cli.command {
        Command::Spectrum(a) => cmd_spectrum(a, stdout),
        Command::Wavefunction(a) => cmd_wavefunction(a, stdout),
        Command::Transform(a) => cmd_transform(a, stdout),
        Command::Verify(a) => cmd_verify(a, stdout, stderr),
    };
    match outcome {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message());
            f.code()
        }
    }
}
