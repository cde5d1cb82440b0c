use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "bernoulli",
    version,
    about = "Exact Bernoulli numbers from Stirling and Eulerian explicit formulas"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormulaChoice {
    Eq1,
    Eq2,
    Eq3,
    Eq4,
    Oracle,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Stirling,
    Eulerian,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormChoice {
    Stirling,
    Eulerian,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EqChoice {
    #[value(name = "5")]
    Eq5,
    #[value(name = "6")]
    Eq6,
    #[value(name = "10")]
    Eq10,
    #[value(name = "11")]
    Eq11,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bernoulli numbers from one formula or all of them.
    Bern {
        /// Highest order r; eq1/eq2 give B_2..B_{R+1}, the others B_1..B_R.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max: u64,
        #[arg(long, value_enum, default_value_t = FormulaChoice::All)]
        formula: FormulaChoice,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Dump the Stirling or Eulerian triangle.
    Tables {
        #[arg(long, value_enum)]
        kind: TableKind,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Closed forms of Li_{-r}(-x) as rational functions.
    Polylog {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = FormChoice::Both)]
        form: FormChoice,
        /// Evaluate exactly at x = num/den.
        #[arg(long, allow_hyphen_values = true)]
        eval: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Exact cross-checks of every formula and identity up to R.
    Verify {
        #[arg(long, alias = "max", value_parser = clap::value_parser!(u64).range(1..))]
        max_r: u64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Numerical checks of the zeta integral representations.
    Quadcheck {
        #[arg(long = "eq", value_enum, default_value_t = EqChoice::All)]
        identity: EqChoice,
        #[arg(long, default_value_t = 8)]
        max_r: usize,
        /// Mellin exponent for EQ11, as num/den in (0, 1).
        #[arg(long)]
        n: Option<String>,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Median wall time of each formula over B_1..B_{R+1}.
    Bench {
        #[arg(long, alias = "max", value_parser = clap::value_parser!(u64).range(1..))]
        max_r: u64,
        #[arg(long, alias = "repetitions", default_value_t = 3,
              value_parser = clap::value_parser!(u64).range(1..))]
        reps: u64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}
