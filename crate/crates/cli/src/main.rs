//! `fhsets`: generate, analyze and verify frequency-hopping sequence sets.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid parameters or
//! malformed input, 3 I/O failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use fhsets::constructions::{construction_c, interleave, ConstructionSpec, InterleaveMap};
use fhsets::report::AnalysisReport;
use fhsets::verify::{self, VerifyConfig};
use fhsets::{table, FhsSet};

#[derive(Parser)]
#[command(name = "fhsets", version, about = "Frequency-hopping sequence sets: constructions and exact correlation analysis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a sequence set and write it in the plain-text sequence format.
    Generate(GenerateArgs),
    /// Compute the full correlation, distribution and bound analysis of a file.
    Analyze {
        path: PathBuf,
        /// Emit a single JSON document instead of the text summary.
        #[arg(long)]
        json: bool,
    },
    /// Recompute the AHC comparison table and check each cell against its closed form.
    Table1 {
        /// Largest field or modulus parameter of any row instance.
        #[arg(long, default_value_t = 256)]
        max_q: u64,
        #[arg(long)]
        json: bool,
    },
    /// Run the seeded property suite.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        cases: usize,
        /// Largest field order in the cyclotomic-number sweep.
        #[arg(long, default_value_t = 4096)]
        max_q: u64,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    Kumar,
    Nhz,
    P2p,
    CyclotomicA,
    CyclotomicB,
    Multiplicative,
    Theorem17,
    Corollary16,
    ConstructionC,
    GenericInterleave,
}

#[derive(clap::Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    construction: Construction,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    m: Option<u64>,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    d: Option<u64>,
    /// Source set for `construction-c` and `generic-interleave`.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Sequence length of the `generic-interleave` output.
    #[arg(long)]
    target_len: Option<usize>,
    /// Seed of the random `generic-interleave` bijection.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

enum Failure {
    Verify,
    Invalid(String),
    Io(String),
}

impl From<fhsets::Error> for Failure {
    fn from(e: fhsets::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

fn need(value: Option<u64>, flag: &str) -> Result<u64, Failure> {
    value.ok_or_else(|| Failure::Invalid(format!("--{flag} is required for this construction")))
}

fn read_set(path: &Path) -> Result<FhsSet, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    FhsSet::from_text(&text).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn generate(args: GenerateArgs) -> Result<(), Failure> {
    use Construction as C;
    let spec = match args.construction {
        C::Kumar => Some(ConstructionSpec::Kumar { p: need(args.p, "p")? }),
        C::Nhz => Some(ConstructionSpec::Nhz {
            k: need(args.k, "k")?,
            n: need(args.n, "n")?,
            d: need(args.d, "d")?,
        }),
        C::P2p => Some(ConstructionSpec::P2p { p: need(args.p, "p")? }),
        C::CyclotomicA => Some(ConstructionSpec::CyclotomicA {
            p: need(args.p, "p")?,
            m: need(args.m, "m")?,
        }),
        C::CyclotomicB => Some(ConstructionSpec::CyclotomicB {
            q: need(args.q, "q")?,
            m: need(args.m, "m")?,
        }),
        C::Multiplicative => Some(ConstructionSpec::Multiplicative { n: need(args.n, "n")? }),
        C::Theorem17 => Some(ConstructionSpec::Theorem17 {
            n: need(args.n, "n")?,
            k: need(args.k, "k")?,
        }),
        C::Corollary16 => Some(ConstructionSpec::Corollary16 {
            p: need(args.p, "p")?,
            m: need(args.m, "m")?,
        }),
        C::ConstructionC | C::GenericInterleave => None,
    };
    let set = match spec {
        Some(spec) => spec.generate()?,
        None => {
            let path = args
                .input
                .as_deref()
                .ok_or_else(|| Failure::Invalid("--input is required for this construction".into()))?;
            let source = read_set(path)?;
            if let C::ConstructionC = args.construction {
                construction_c(&source, need(args.k, "k")? as usize)?
            } else {
                let target_len = args
                    .target_len
                    .ok_or_else(|| Failure::Invalid("--target-len is required for this construction".into()))?;
                let (n, _, l) = source.shape();
                let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
                let map = InterleaveMap::random(n, l, target_len, &mut rng)?;
                interleave(&source, &map)?
            }
        }
    };
    let text = set.to_text();
    match args.output {
        Some(path) => {
            std::fs::write(&path, &text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            let (n, m, l) = set.shape();
            println!("{n} {m} {l}");
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Generate(args) => generate(args),
        Command::Analyze { path, json } => {
            let set = read_set(&path)?;
            let set = set.with_provenance(fhsets::Provenance::new("file").note(path.display().to_string()));
            let report = AnalysisReport::analyze(&set);
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.render_text());
            }
            Ok(())
        }
        Command::Table1 { max_q, json } => {
            let t = table::table1(max_q)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&t).expect("table serializes"));
            } else {
                print!("{}", t.render());
            }
            Ok(())
        }
        Command::Verify {
            seed,
            cases,
            max_q,
            inject_fault,
        } => {
            let summary = verify::run(&VerifyConfig {
                seed,
                cases,
                cyclotomic_max_q: max_q,
                inject_fault,
                ..Default::default()
            });
            print!("{}", summary.render());
            if summary.passed() {
                Ok(())
            } else {
                Err(Failure::Verify)
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify) => ExitCode::from(1),
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
