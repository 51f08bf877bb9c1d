//! Command-line front end. Every input and output file is JSON.
//!
//! Exit codes: 0 success, 2 invalid input, 3 pipeline failure, 4 a
//! certificate failed verification.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::builder::RangedU64ValueParser;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::config::RunConfig;
use crate::fixtures::{fixture_set, write_fixture_set, FIXTURE_MAX_M};
use crate::group::{FiniteGroup, FreeProduct, GroupSpec, LabelledSyllable, Side};
use crate::refute::{
    refute, verify_refutation, CandidateSpec, CoproductCandidate, HomBudget, OracleOptions,
    RefutationCertificate, RefuteError,
};
use crate::rep::{Conjugator, DEFAULT_VERIFY_LEN};
use crate::separation::{build_quotient, separate_word, verify, PipelineError, SeparationCertificate};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_PIPELINE: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "freeprod", version, about = "Finite quotients of free products of finite groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Certify that a word of G * H survives in a finite quotient.
    Separate {
        #[command(flatten)]
        groups: GroupArgs,
        /// Reduced word as JSON, or @path to a JSON file.
        #[arg(long)]
        word: String,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Certify a finite quotient where gh has order greater than m.
    Quotient {
        #[command(flatten)]
        groups: GroupArgs,
        /// Element of G (default: first non-identity element).
        #[arg(long)]
        g: Option<String>,
        /// Element of H (default: first non-identity element).
        #[arg(long)]
        h: Option<String>,
        #[arg(short = 'm', value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Refute a candidate coproduct (F, iota_G, iota_H).
    Refute {
        #[arg(long)]
        candidate: PathBuf,
        #[arg(long)]
        g: Option<String>,
        #[arg(long)]
        h: Option<String>,
        /// Extra exhaustive check against a dihedral quotient.
        #[arg(long, value_enum)]
        oracle: Option<Oracle>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Recheck a separation, quotient or refutation certificate.
    Verify {
        certificate: PathBuf,
    },
    /// Regenerate the acceptance fixture set into a directory.
    Fixtures {
        #[arg(long, default_value_t = FIXTURE_MAX_M)]
        max_m: u64,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Oracle {
    Dihedral,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    /// First factor: Cayley table or permutation generators.
    #[arg(long = "G", value_name = "FILE")]
    pub g_file: PathBuf,
    /// Second factor.
    #[arg(long = "H", value_name = "FILE")]
    pub h_file: PathBuf,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// `all-ones` or `random:<seed>`.
    #[arg(long, default_value = "all-ones")]
    pub conjugator: Conjugator,
    #[arg(long, default_value_t = DEFAULT_VERIFY_LEN, value_parser = RangedU64ValueParser::<usize>::new().range(2..))]
    pub verify_len: usize,
    /// Seed for the conjugator retries.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Conjugators tried in total.
    #[arg(long, default_value_t = 5, value_parser = RangedU64ValueParser::<usize>::new().range(1..))]
    pub max_conjugators: usize,
    #[arg(long, default_value_t = 10_000, value_parser = RangedU64ValueParser::<usize>::new().range(1..))]
    pub closure_cap: usize,
    /// Output file (a directory for `fixtures`); stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl RunArgs {
    pub fn config(&self) -> RunConfig {
        RunConfig {
            verify_len: self.verify_len,
            conjugator: self.conjugator,
            max_conjugators: self.max_conjugators,
            closure_cap: self.closure_cap,
            seed: self.seed,
        }
    }
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub kind: &'static str,
    pub message: String,
}

impl CliError {
    fn validation(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_VALIDATION,
            kind: "validation",
            message: message.into(),
        }
    }

    fn to_json(&self) -> String {
        json!({ "error": { "kind": self.kind, "exit_code": self.code, "message": self.message } }).to_string()
    }
}

impl From<PipelineError> for CliError {
    fn from(e: PipelineError) -> Self {
        let validation = matches!(
            e,
            PipelineError::EmptyWord
                | PipelineError::IdentityElement(_)
                | PipelineError::ZeroM
                | PipelineError::Group(_)
                | PipelineError::Rep(crate::rep::RepError::TrivialFactor(_))
                | PipelineError::Rep(crate::rep::RepError::VerifyLenTooShort(_))
        );
        if validation {
            CliError::validation(e.to_string())
        } else {
            CliError {
                code: EXIT_PIPELINE,
                kind: "pipeline",
                message: e.to_string(),
            }
        }
    }
}

impl From<RefuteError> for CliError {
    fn from(e: RefuteError) -> Self {
        match e {
            RefuteError::Pipeline(p) => p.into(),
            other => CliError::validation(other.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::validation(format!("{}: {e}", path.display())))
}

fn parse<T: serde::de::DeserializeOwned>(text: &str, what: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::validation(format!("malformed {what}: {e}")))
}

fn load_group(path: &Path) -> Result<FiniteGroup, CliError> {
    let spec: GroupSpec = parse(&read(path)?, &format!("group file {}", path.display()))?;
    spec.build()
        .map_err(|e| CliError::validation(format!("{}: {e}", path.display())))
}

fn load_pair(args: &GroupArgs) -> Result<FreeProduct, CliError> {
    Ok(FreeProduct::new(load_group(&args.g_file)?, load_group(&args.h_file)?))
}

fn element(group: &FiniteGroup, side: Side, label: Option<&str>) -> Result<usize, CliError> {
    match label {
        Some(l) => group
            .index_of(l)
            .ok_or_else(|| CliError::validation(format!("{side} has no element {l}"))),
        None => group
            .non_identity()
            .next()
            .ok_or_else(|| CliError::validation(format!("{side} is trivial"))),
    }
}

fn emit(out: Option<&Path>, contents: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, contents).map_err(|e| CliError {
            code: EXIT_VALIDATION,
            kind: "io",
            message: format!("{}: {e}", path.display()),
        }),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

fn with_newline(mut s: String) -> String {
    s.push('\n');
    s
}

pub fn execute(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Separate { groups, word, run } => {
            let fp = load_pair(&groups)?;
            let text = match word.strip_prefix('@') {
                Some(path) => read(Path::new(path))?,
                None => word,
            };
            let raw: Vec<LabelledSyllable> = parse(&text, "word")?;
            let w = fp.from_labels(&raw).map_err(|e| CliError::validation(e.to_string()))?;
            let cert = separate_word(&fp, &w, &run.config())?;
            emit(run.out.as_deref(), &with_newline(cert.to_json()))
        }
        Command::Quotient { groups, g, h, m, run } => {
            let fp = load_pair(&groups)?;
            let g = element(fp.g(), Side::G, g.as_deref())?;
            let h = element(fp.h(), Side::H, h.as_deref())?;
            let cert = build_quotient(&fp, g, h, m, &run.config())?;
            emit(run.out.as_deref(), &with_newline(cert.to_json()))
        }
        Command::Refute {
            candidate,
            g,
            h,
            oracle,
            run,
        } => {
            let spec: CandidateSpec = parse(&read(&candidate)?, "candidate")?;
            let candidate = CoproductCandidate::from_spec(&spec)?;
            let choice = match (g, h) {
                (None, None) => None,
                (g, h) => Some((
                    element(candidate.g(), Side::G, g.as_deref())?,
                    element(candidate.h(), Side::H, h.as_deref())?,
                )),
            };
            let oracles = OracleOptions {
                dihedral: oracle == Some(Oracle::Dihedral),
                ..OracleOptions::default()
            };
            let cert = refute(&candidate, choice, &run.config(), &oracles)?;
            emit(run.out.as_deref(), &with_newline(cert.to_json()))
        }
        Command::Verify { certificate } => {
            let text = read(&certificate)?;
            let value: serde_json::Value = parse(&text, "certificate")?;
            let report = if value.get("candidate").is_some() {
                let cert: RefutationCertificate = parse(&text, "refutation certificate")?;
                verify_refutation(&cert, HomBudget::default())
            } else {
                let cert: SeparationCertificate = parse(&text, "certificate")?;
                verify(&cert)
            };
            match report {
                Ok(report) => {
                    for check in report.passed {
                        println!("pass {check}");
                    }
                    Ok(())
                }
                Err(e) => Err(CliError {
                    code: EXIT_VERIFY,
                    kind: "verification",
                    message: e.to_string(),
                }),
            }
        }
        Command::Fixtures { max_m, run } => {
            let Some(dir) = run.out.as_deref() else {
                return Err(CliError::validation("fixtures needs --out <dir>"));
            };
            let files = fixture_set(&run.config(), max_m)?;
            let written = write_fixture_set(dir, &files).map_err(|e| CliError {
                code: EXIT_VALIDATION,
                kind: "io",
                message: e.to_string(),
            })?;
            println!("wrote {} files to {}", written.len(), dir.display());
            Ok(())
        }
    }
}

/// Parses arguments, runs the command and returns the exit code. Errors go
/// to stderr as one JSON object.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_VALIDATION } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("{}", e.to_json());
            e.code
        }
    }
}
