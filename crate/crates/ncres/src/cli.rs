//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};

use crate::par::ExecMode;
use crate::pipeline::case::DEFAULT_SEED;
use crate::pipeline::{CaseId, OracleMode, Theorem};
use crate::report::{build_report, to_json, to_markdown, RunConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ORACLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TheoremArg {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    #[value(name = "3")]
    Three,
    All,
}

#[allow(clippy::upper_case_acronyms)]
#[derive(Clone, Copy, Debug, ValueEnum)]
enum CaseArg {
    #[value(name = "I")]
    I,
    #[value(name = "II")]
    II,
    #[value(name = "III")]
    III,
    #[value(name = "IV")]
    IV,
    #[value(name = "V")]
    V,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OracleArg {
    Exact,
    Quadrature,
    Both,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

/// Recompute the boundary residue densities and check them against their printed forms.
#[derive(Debug, Parser)]
#[command(name = "ncres", version)]
struct Args {
    #[arg(long, value_enum, default_value = "all")]
    theorem: TheoremArg,
    #[arg(long, value_enum, default_value = "all", ignore_case = true)]
    case: CaseArg,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    m_min: u32,
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
    m_max: u32,
    #[arg(long, value_enum, default_value = "both")]
    oracle: OracleArg,
    #[arg(long, default_value_t = 1e-8, allow_negative_numbers = true)]
    tolerance: f64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Report path; standard output when absent
    #[arg(long)]
    out: Option<PathBuf>,
    /// Base seed of the random symbol assignments
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Random assignments per case for the quadrature oracle
    #[arg(long, default_value_t = 3)]
    samples: u32,
    /// Evaluate every work item on the calling thread
    #[arg(long)]
    sequential: bool,
}

impl Args {
    fn config(&self) -> Result<RunConfig, String> {
        if self.m_min > self.m_max {
            return Err(format!(
                "--m-min {} exceeds --m-max {}",
                self.m_min, self.m_max
            ));
        }
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(format!(
                "--tolerance must be positive, got {}",
                self.tolerance
            ));
        }
        let theorems = match self.theorem {
            TheoremArg::One => vec![Theorem::T1],
            TheoremArg::Two => vec![Theorem::T2],
            TheoremArg::Three => vec![Theorem::T3],
            TheoremArg::All => Theorem::ALL.to_vec(),
        };
        let case = match self.case {
            CaseArg::I => Some(CaseId::I),
            CaseArg::II => Some(CaseId::II),
            CaseArg::III => Some(CaseId::III),
            CaseArg::IV => Some(CaseId::IV),
            CaseArg::V => Some(CaseId::V),
            CaseArg::All => None,
        };
        let oracle = match self.oracle {
            OracleArg::Exact => OracleMode::Exact,
            OracleArg::Quadrature => OracleMode::Quadrature,
            OracleArg::Both => OracleMode::Both,
        };
        Ok(RunConfig {
            theorems,
            case,
            m_min: self.m_min,
            m_max: self.m_max,
            oracle,
            tolerance: self.tolerance,
            seed: self.seed,
            samples: self.samples,
        })
    }
}

/// Write through a temporary file in the target directory, then rename.
fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut builder = tempfile::Builder::new();
    #[cfg(unix)]
    {
        use std::os::unix::fs::PermissionsExt;
        builder.permissions(std::fs::Permissions::from_mode(0o644));
    }
    let mut tmp = builder.tempfile_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

/// Runs the tool on `argv` (program name first) and returns the process exit code.
pub fn run_cli<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let config = match args.config() {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_USAGE;
        }
    };
    let mode = if args.sequential {
        ExecMode::Sequential
    } else {
        ExecMode::default()
    };
    let report = match build_report(&config, mode) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_ORACLE;
        }
    };
    let text = match args.format {
        Format::Json => to_json(&report),
        Format::Markdown => to_markdown(&report),
    };
    match &args.out {
        Some(path) => {
            if let Err(e) = write_atomic(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None => print!("{text}"),
    }
    for f in &report.summary.internal_failures {
        eprintln!("internal check failed: {f}");
    }
    if report.summary.internal_ok {
        EXIT_OK
    } else {
        EXIT_ORACLE
    }
}
