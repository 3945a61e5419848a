//! Command-line front end: `ea` for effect-algebra tables, `clan` for
//! function families, `demo` for the worked examples.
//!
//! Every command returns an [`Outcome`] instead of printing, so the binaries
//! are thin and tests can drive the same code.

mod clan;
mod demo;
mod ea;
mod report;

use std::ffi::OsString;
use std::path::Path;

use effalg::algebra::verify_axioms;
use effalg::{EffectAlgebra, EffectAlgebraTable, Elem, Rational, Scalar};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use report::Report;

/// Seed for every sampled mixture.
pub const SAMPLE_SEED: u64 = 0x5eed_0fe4;

/// Mixtures drawn per algebra by the suite.
pub const MIXTURES: usize = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tool {
    Ea,
    Clan,
    Demo,
}

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn from_report(report: &Report) -> Self {
        Self {
            stdout: report.render(),
            stderr: String::new(),
            code: i32::from(report.failed()),
        }
    }

    fn error(message: impl std::fmt::Display) -> Self {
        Self {
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
            code: 2,
        }
    }

    /// Writes the captured streams and exits with the captured code.
    pub fn emit(self) -> ! {
        print!("{}", self.stdout);
        eprint!("{}", self.stderr);
        std::process::exit(self.code)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Input { path: String, source: effalg::Error },
    #[error(transparent)]
    Lib(#[from] effalg::Error),
}

pub type CliResult<T> = Result<T, CliError>;

/// Parses `args` (program name first) for `tool` and runs the command.
pub fn run<I, T>(tool: Tool, args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let result = match tool {
        Tool::Ea => ea::main(args),
        Tool::Clan => clan::main(args),
        Tool::Demo => demo::main(args),
    };
    match result {
        Ok(Ok(report)) => Outcome::from_report(&report),
        Ok(Err(e)) => Outcome::error(e),
        Err(e) => clap_outcome(e),
    }
}

fn clap_outcome(e: clap::Error) -> Outcome {
    use clap::error::ErrorKind;
    match e.kind() {
        ErrorKind::DisplayHelp
        | ErrorKind::DisplayVersion
        | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand
            if e.exit_code() == 0 =>
        {
            Outcome {
                stdout: e.to_string(),
                stderr: String::new(),
                code: 0,
            }
        }
        _ => {
            let text = e.to_string();
            let first = text.lines().next().unwrap_or("usage error");
            let first = first.strip_prefix("error: ").unwrap_or(first);
            Outcome::error(first)
        }
    }
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn input_error(path: &Path) -> impl FnOnce(effalg::Error) -> CliError + '_ {
    move |source| CliError::Input {
        path: path.display().to_string(),
        source,
    }
}

fn parse_table(path: &Path) -> CliResult<EffectAlgebraTable> {
    EffectAlgebraTable::parse(&read(path)?).map_err(|e| input_error(path)(e.into()))
}

/// Loads and verifies a table. A table that fails the axioms is reported
/// as `PROP axioms FAIL` and yields `None`.
fn load_algebra(path: &Path, report: &mut Report) -> CliResult<Option<EffectAlgebra>> {
    let table = parse_table(path)?;
    let axioms = verify_axioms(&table);
    if !axioms.passed {
        report.prop("axioms", false, Some(axioms.summary()));
        return Ok(None);
    }
    Ok(Some(EffectAlgebra::new(table)?))
}

/// `{a,b}` from element names.
fn name_set(algebra: &EffectAlgebra, elems: &[Elem]) -> String {
    let names: Vec<&str> = elems.iter().map(|&e| algebra.name(e)).collect();
    format!("{{{}}}", names.join(","))
}

/// Convex weights for `k` vertices: integers in `0..=12`, at least one
/// positive, normalised to sum 1.
pub fn mixture_weights(rng: &mut ChaCha8Rng, k: usize) -> Vec<Rational> {
    loop {
        let raw: Vec<i64> = (0..k).map(|_| rng.gen_range(0..=12)).collect();
        let total: i64 = raw.iter().sum();
        if total > 0 {
            return raw.into_iter().map(|r| Rational::ratio(r, total)).collect();
        }
    }
}
