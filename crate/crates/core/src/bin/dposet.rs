use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use dposet::checks::{self, Suite};
use dposet::lincomb::{LinComb, TensorDisplay};
use dposet::qsym::MonomialDisplay;
use dposet::{algebra, double_poset, lr, perm, qsym, text};
use dposet::{CanonicalForm, DoublePoset, Partition, Permutation, Word};

/// Exact arithmetic on double posets.
///
/// Wherever a double poset is expected, pass a file in the text format or
/// one of the inline forms `point`, `empty`, `perm:<σ>`, `shape:<ν>`,
/// `antichain:<n>`, `key:<hex>`.
#[derive(Parser)]
#[command(name = "dposet", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a double poset and print its canonical text form.
    Parse { dp: String },
    /// Print the canonical key in hexadecimal.
    Canon { dp: String },
    /// Composition `AB`.
    Product { a: String, b: String },
    /// Sum over the lower ideals of the first order.
    Coproduct { dp: String },
    /// Antipode of the basis element.
    Antipode { dp: String },
    /// Number of pictures between two double posets.
    Pair { a: String, b: String },
    /// Internal product `A ∘ B`.
    Internal { a: String, b: String },
    /// Linear extensions of a special double poset, as permutations.
    Linext { dp: String },
    /// Generating function of π-partitions, monomial basis.
    Gamma { dp: String },
    /// Sum of linear extensions in the permutation algebra.
    Lmap { dp: String },
    /// Both lattice-word counts and the pairing with the shape's double poset.
    Lr {
        dp: String,
        #[arg(long)]
        partition: String,
    },
    /// Whether a word fits into a special double poset.
    Fits {
        dp: String,
        #[arg(long)]
        word: String,
    },
    /// Run a verification suite.
    Check {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// A failed command: exit status and message.
struct Failure(u8, String);

impl From<dposet::Error> for Failure {
    fn from(e: dposet::Error) -> Self {
        Failure(1, format!("{}: {e}", e.name()))
    }
}

type CmdResult = Result<String, Failure>;

fn load(arg: &str) -> Result<DoublePoset, Failure> {
    if arg == "point" {
        return Ok(DoublePoset::point());
    }
    if arg == "empty" {
        return Ok(DoublePoset::empty());
    }
    if let Some((kind, value)) = arg.split_once(':') {
        let usage = |m: String| Failure(2, format!("invalid argument {arg:?}: {m}"));
        match kind {
            "perm" => {
                let sigma: Permutation = value.parse().map_err(|e: dposet::Error| usage(e.to_string()))?;
                return Ok(DoublePoset::from_permutation(&sigma));
            }
            "shape" => {
                let nu: Partition = value.parse().map_err(|e: dposet::Error| usage(e.to_string()))?;
                return Ok(DoublePoset::pi_from_partition(&nu));
            }
            "antichain" => {
                let n: usize = value.parse().map_err(|e: std::num::ParseIntError| usage(e.to_string()))?;
                return Ok(DoublePoset::antichain(n));
            }
            "key" => return Ok(CanonicalForm::from_hex(value)?.double_poset()),
            _ => {}
        }
    }
    let contents = fs::read_to_string(arg).map_err(|e| Failure(1, format!("IoError: {arg}: {e}")))?;
    Ok(text::parse(&contents)?)
}

fn key(arg: &str) -> Result<CanonicalForm, Failure> {
    Ok(load(arg)?.canonical_form()?)
}

fn execute(command: Command) -> CmdResult {
    Ok(match command {
        Command::Parse { dp } => text::serialize(&load(&dp)?)?.trim_end().to_string(),
        Command::Canon { dp } => key(&dp)?.to_hex(),
        Command::Product { a, b } => {
            algebra::product(&LinComb::basis(key(&a)?), &LinComb::basis(key(&b)?))?.to_string()
        }
        Command::Coproduct { dp } => TensorDisplay(&algebra::coproduct_basis(&key(&dp)?)?).to_string(),
        Command::Antipode { dp } => algebra::Antipode::new().basis(&key(&dp)?)?.to_string(),
        Command::Pair { a, b } => double_poset::pairing_basis(&load(&a)?, &load(&b)?).to_string(),
        Command::Internal { a, b } => algebra::internal_product_basis(&key(&a)?, &key(&b)?)?.to_string(),
        Command::Linext { dp } => perm::linear_extensions_special(&load(&dp)?)?
            .iter()
            .map(Permutation::to_string)
            .collect::<Vec<_>>()
            .join("\n"),
        Command::Gamma { dp } => MonomialDisplay(&qsym::gamma(&load(&dp)?)?).to_string(),
        Command::Lmap { dp } => perm::linear_extension_map(&LinComb::basis(key(&dp)?))?.to_string(),
        Command::Lr { dp, partition } => {
            let d = load(&dp)?;
            let nu: Partition = partition
                .parse()
                .map_err(|e: dposet::Error| Failure(2, format!("invalid --partition {partition:?}: {e}")))?;
            let complement = lr::lr_count_complement(&d, &nu)?;
            let mirror = lr::lr_count_mirror(&d, &nu)?;
            let pairing = double_poset::pairing_basis(&d, &DoublePoset::pi_from_partition(&nu));
            format!("complement-count={complement} mirror-count={mirror} pairing={pairing}")
        }
        Command::Fits { dp, word } => {
            let w: Word = word
                .parse()
                .map_err(|e: dposet::Error| Failure(2, format!("invalid --word {word:?}: {e}")))?;
            lr::fits_into(&w, &load(&dp)?)?.to_string()
        }
        Command::Check { suite, max_n, seed } => {
            let report = checks::run(suite, max_n, seed)?;
            let out = report.to_string();
            if !report.passed() {
                println!("{out}");
                return Err(Failure(1, "verification failed".into()));
            }
            out
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(out) => {
            if !out.is_empty() {
                println!("{out}");
            }
            ExitCode::SUCCESS
        }
        Err(Failure(code, message)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

