//! `cagroups`: construct groups, test the centraliser classes, build normal
//! partitions, run the structural classifier and search catalogs.
//!
//! Exit status: 0 on success or agreement, 1 on input or cap errors, 2 on a
//! verified mathematical disagreement or a predicate failure with a
//! counterexample.

mod commands;
mod source;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cagroups::classify::DEFAULT_QUOTIENT_CAP;
use cagroups::group::DEFAULT_ENUMERATION_CAP;

use source::GroupSource;

#[derive(Parser, Debug)]
#[command(name = "cagroups", version, about = "Centraliser-intersection classes of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct Caps {
    /// Largest group a permutation closure may enumerate.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    max_order: usize,
    /// Largest central quotient the classifier and partitions may build.
    #[arg(long, default_value_t = DEFAULT_QUOTIENT_CAP)]
    max_quotient_order: usize,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Machine,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum FlavourArg {
    Camin,
    Fmin,
}

impl From<FlavourArg> for cagroups::partition::Flavour {
    fn from(f: FlavourArg) -> Self {
        match f {
            FlavourArg::Camin => Self::Camin,
            FlavourArg::Fmin => Self::Fmin,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a group and write it as a one-record catalog.
    Construct {
        #[command(flatten)]
        source: GroupSource,
        /// Output catalog path; standard output if omitted.
        #[arg(long, short)]
        out: Option<PathBuf>,
        /// Record name; defaults to the constructor expression.
        #[arg(long)]
        name: Option<String>,
        #[command(flatten)]
        caps: Caps,
    },
    /// Basic invariants and class verdicts.
    Info {
        #[command(flatten)]
        source: GroupSource,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        caps: Caps,
    },
    /// Match the six structural cases and check them against the predicate.
    Classify {
        #[command(flatten)]
        source: GroupSource,
        #[arg(long, value_enum, default_value_t = FlavourArg::Camin)]
        flavour: FlavourArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Recurse in cases 2 and 5 with the classifier instead of the predicate.
        #[arg(long)]
        recurse_with_classifier: bool,
        #[command(flatten)]
        caps: Caps,
    },
    /// Build and verify the normal partition of G/Z(G).
    Partition {
        #[command(flatten)]
        source: GroupSource,
        #[arg(long, value_enum, default_value_t = FlavourArg::Camin)]
        flavour: FlavourArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        caps: Caps,
    },
    /// Evaluate both sides of each lemma on one group.
    VerifyLemmas {
        #[command(flatten)]
        source: GroupSource,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        caps: Caps,
    },
    /// Filter a catalog by a predicate expression.
    Search {
        /// Catalog file, or `builtin-corpus`.
        catalog: PathBuf,
        /// Boolean expression over ca, f, camin, fmin, dgroup, abelian,
        /// nilpotent, solvable, metabelian with and, or, not and parentheses.
        #[arg(long)]
        expr: String,
        /// Order filter: `N` or `A..B` (inclusive).
        #[arg(long)]
        order: Option<String>,
        /// Print every record, not only matches.
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        caps: Caps,
    },
    /// List or export the built-in corpus.
    Corpus {
        #[arg(long, conflicts_with = "emit", required_unless_present = "emit")]
        list: bool,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let out = &mut std::io::stdout().lock();
    let status = match cli.command {
        Command::Construct { source, out: path, name, caps } => commands::construct(out, &source, path, name, caps),
        Command::Info { source, format, caps } => commands::info(out, &source, format, caps),
        Command::Classify {
            source,
            flavour,
            format,
            recurse_with_classifier,
            caps,
        } => commands::classify(out, &source, flavour.into(), format, recurse_with_classifier, caps),
        Command::Partition {
            source,
            flavour,
            format,
            caps,
        } => commands::partition(out, &source, flavour.into(), format, caps),
        Command::VerifyLemmas { source, format, caps } => commands::verify_lemmas(out, &source, format, caps),
        Command::Search {
            catalog,
            expr,
            order,
            all,
            caps,
        } => commands::search(out, &catalog, &expr, order.as_deref(), all, caps),
        Command::Corpus { list, emit } => commands::corpus(out, list, emit),
    };
    match status {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
