use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use amalgam5::engine::DomainKind;
use amalgam5::matrix::{builtin_generators, generators_from_fixture, Generators};
use amalgam5::reduction::IdealSign;
use amalgam5::report::VerificationReport;
use amalgam5::suites::{self, ModLevel, ModOptions};

#[derive(Parser)]
#[command(name = "amalgam5", version, about = "Exact verifier for the 5-dimensional unitary amalgam representation and its reductions mod p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite
    Verify {
        #[command(subcommand)]
        what: VerifyWhat,
    },
    /// Orbit partition of the projective points under the reduced generators
    Orbits {
        #[command(flatten)]
        modargs: ModArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Exact group order of the reduction, certified where possible
    Order {
        #[command(flatten)]
        modargs: ModArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Spectrum checks for a named element
    Spectrum {
        /// Element name; only "bc" is defined
        element: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Re-render a previously written JSON report
    Report {
        /// Path to a JSON report produced with --json
        #[arg(long)]
        input: PathBuf,
        /// Output format
        #[arg(long, default_value = "text")]
        format: ReportFormat,
    },
}

#[derive(Subcommand)]
enum VerifyWhat {
    /// The exact-arithmetic suite over Z[1/sqrt(-2)]
    Exact {
        /// Load generators from a fixture file instead of the built-ins
        #[arg(long)]
        fixture: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// The mod-p suite for one prime ideal
    Mod {
        #[command(flatten)]
        modargs: ModArgs,
        /// quick: reduction well-definedness, embeddings, membership;
        /// full: adds orbit structure and order certification
        #[arg(long, default_value = "quick")]
        level: LevelArg,
        /// BFS closure cap
        #[arg(long, default_value_t = suites::DEFAULT_CLOSURE_CAP)]
        cap: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args)]
struct ModArgs {
    /// Odd prime p < 2^20
    #[arg(long)]
    prime: u64,
    /// Which prime ideal over p (split primes only; ignored when inert)
    #[arg(long, default_value = "plus")]
    ideal: IdealArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Memory budget in bytes for orbit storage
    #[arg(long, default_value_t = suites::DEFAULT_MAX_MEM)]
    max_mem: u64,
    /// Stabilizer-chain domain; the default picks by memory estimate
    #[arg(long)]
    domain: Option<DomainArg>,
}

#[derive(Args)]
struct OutputArgs {
    /// Also write the report as JSON to this path
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum IdealArg {
    Plus,
    Minus,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum DomainArg {
    Vectors,
    Projective,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

impl From<IdealArg> for IdealSign {
    fn from(v: IdealArg) -> Self {
        match v {
            IdealArg::Plus => IdealSign::Plus,
            IdealArg::Minus => IdealSign::Minus,
        }
    }
}

impl From<DomainArg> for DomainKind {
    fn from(v: DomainArg) -> Self {
        match v {
            DomainArg::Vectors => DomainKind::Vectors,
            DomainArg::Projective => DomainKind::Projective,
        }
    }
}

fn load_generators(fixture: &Option<PathBuf>) -> Result<Generators, String> {
    match fixture {
        None => Ok(builtin_generators()),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            generators_from_fixture(&text).map_err(|e| format!("bad fixture: {e}"))
        }
    }
}

fn emit(report: &VerificationReport, out: &OutputArgs) -> Result<ExitCode, String> {
    print!("{}", report.render_text());
    if let Some(path) = &out.json {
        std::fs::write(path, report.to_json()).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    Ok(exit_code(report))
}

fn exit_code(report: &VerificationReport) -> ExitCode {
    match report.exit_code() {
        0 => ExitCode::SUCCESS,
        code => ExitCode::from(code as u8),
    }
}

fn run() -> Result<ExitCode, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { what } => match what {
            VerifyWhat::Exact { fixture, seed, out } => {
                let gens = load_generators(&fixture)?;
                let report = suites::verify_exact(&gens, seed);
                emit(&report, &out)
            }
            VerifyWhat::Mod {
                modargs,
                level,
                cap,
                out,
            } => {
                let opts = ModOptions {
                    level: match level {
                        LevelArg::Quick => ModLevel::Quick,
                        LevelArg::Full => ModLevel::Full,
                    },
                    seed: modargs.seed,
                    cap,
                    max_mem: modargs.max_mem,
                    domain: modargs.domain.map(Into::into),
                };
                let report = suites::verify_mod(modargs.prime, modargs.ideal.into(), &opts)
                    .map_err(|e| e.to_string())?;
                emit(&report, &out)
            }
        },
        Command::Orbits { modargs, out } => {
            let report = suites::orbits_suite(modargs.prime, modargs.ideal.into(), modargs.max_mem)
                .map_err(|e| e.to_string())?;
            emit(&report, &out)
        }
        Command::Order { modargs, out } => {
            let opts = ModOptions {
                level: ModLevel::Full,
                seed: modargs.seed,
                cap: suites::DEFAULT_CLOSURE_CAP,
                max_mem: modargs.max_mem,
                domain: modargs.domain.map(Into::into),
            };
            let report = suites::order_suite(modargs.prime, modargs.ideal.into(), &opts)
                .map_err(|e| e.to_string())?;
            emit(&report, &out)
        }
        Command::Spectrum { element, out } => {
            if element != "bc" {
                return Err(format!("unknown element {element:?}; only \"bc\" is defined"));
            }
            let report = suites::spectrum_suite(&builtin_generators());
            emit(&report, &out)
        }
        Command::Report { input, format } => {
            let text = std::fs::read_to_string(&input)
                .map_err(|e| format!("cannot read {}: {e}", input.display()))?;
            let report =
                VerificationReport::from_json(&text).map_err(|e| format!("bad report: {e}"))?;
            match format {
                ReportFormat::Text => print!("{}", report.render_text()),
                ReportFormat::Json => println!("{}", report.to_json()),
            }
            Ok(exit_code(&report))
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
