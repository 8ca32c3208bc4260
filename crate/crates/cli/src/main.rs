mod commands;
mod load;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "dmm", version, about = "Finite De Morgan monoids, residuated lattices and relevant algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Class {
    Irl,
    Dmm,
    Ra,
}

#[derive(Args, Clone)]
pub struct OutputOpts {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Append ASCII Hasse diagrams to text reports.
    #[arg(long)]
    pub hasse: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of an IRL, a De Morgan monoid or a relevant algebra.
    Validate {
        #[arg(long)]
        algebra: String,
        #[arg(long, value_enum, default_value_t = Class::Dmm)]
        class: Class,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// FSI / SI / simple classification.
    Classify {
        #[arg(long)]
        algebra: String,
        #[arg(long, value_enum, default_value_t = Class::Dmm)]
        class: Class,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Predicates, classification and the structure checks that apply.
    Analyze {
        #[arg(long)]
        algebra: String,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Decide whether an algebra satisfies equations, inequations or quasi-equations.
    Satisfies {
        #[arg(long)]
        algebra: String,
        /// Statement text, or @file with one statement per line.
        #[arg(long, allow_hyphen_values = true)]
        statement: String,
        /// Largest number of variables per statement.
        #[arg(long, default_value_t = dmm_core::term::DEFAULT_VARIABLE_LIMIT)]
        max_vars: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Build an algebra from a named one by products, extensions or subalgebras.
    Construct {
        #[arg(long)]
        algebra: String,
        /// Multiply by this algebra (repeatable).
        #[arg(long)]
        product: Vec<String>,
        /// Apply this many rigorous two-point extensions.
        #[arg(long, default_value_t = 0)]
        extend: usize,
        /// Take the subalgebra generated by these comma-separated elements.
        #[arg(long, allow_hyphen_values = true)]
        generate: Option<String>,
        /// Relabel into canonical form.
        #[arg(long)]
        canonical: bool,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Enumerate all algebras of one size up to isomorphism.
    Enumerate {
        #[arg(long, value_enum, default_value_t = Class::Dmm)]
        class: Class,
        #[arg(long)]
        size: usize,
        /// Keep only entries with these properties (repeatable).
        #[arg(long)]
        predicate: Vec<String>,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        jobs: Option<usize>,
        /// Allow sizes above the default ceiling.
        #[arg(long)]
        unsafe_size: bool,
        /// Resumable progress file.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// All homomorphisms between two algebras.
    Homs {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        target: String,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Decide isomorphism and print an isomorphism when one exists.
    Iso {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        target: String,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Quotient by the deductive filter generated by some elements.
    Quotient {
        #[arg(long)]
        algebra: String,
        /// Comma-separated generators of the filter.
        #[arg(long, allow_hyphen_values = true)]
        filter: String,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// The e-free reduct as a relevant algebra.
    Reduct {
        #[arg(long)]
        algebra: String,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Deductive filter generated by some elements.
    Dfg {
        #[arg(long)]
        algebra: String,
        /// Comma-separated generators; empty for the least filter.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        elements: String,
        #[arg(long, value_enum, default_value_t = Class::Dmm)]
        class: Class,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Enumerate all De Morgan monoids up to a size and run every theorem check.
    Suite {
        #[arg(long, default_value_t = 6)]
        size: usize,
        #[arg(long)]
        jobs: Option<usize>,
        /// Seed for the random term round-trip.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        unsafe_size: bool,
        #[command(flatten)]
        output: OutputOpts,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, output) = match cli.command {
        Command::Validate { algebra, class, output } => (commands::validate(&algebra, class), output),
        Command::Classify { algebra, class, output } => (commands::classify_cmd(&algebra, class), output),
        Command::Analyze { algebra, output } => (commands::analyze(&algebra), output),
        Command::Satisfies { algebra, statement, max_vars, output } => {
            (commands::satisfies(&algebra, &statement, max_vars), output)
        }
        Command::Construct { algebra, product, extend, generate, canonical, output } => {
            (commands::construct(&algebra, &product, extend, generate.as_deref(), canonical), output)
        }
        Command::Enumerate { class, size, predicate, limit, jobs, unsafe_size, checkpoint, output } => {
            let opts = commands::EnumerateArgs { class, size, predicate, limit, jobs, unsafe_size, checkpoint };
            (commands::enumerate(&opts), output)
        }
        Command::Homs { algebra, target, output } => (commands::homs_cmd(&algebra, &target), output),
        Command::Iso { algebra, target, output } => (commands::iso(&algebra, &target), output),
        Command::Quotient { algebra, filter, output } => (commands::quotient_cmd(&algebra, &filter), output),
        Command::Reduct { algebra, output } => (commands::reduct(&algebra), output),
        Command::Dfg { algebra, elements, class, output } => (commands::dfg_cmd(&algebra, &elements, class), output),
        Command::Suite { size, jobs, seed, unsafe_size, output } => {
            (commands::suite(size, jobs, seed, unsafe_size), output)
        }
    };
    match result.and_then(|report| output::emit(&report, &output).map(|()| report.passed)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
