use clap::{Args, Parser, Subcommand, ValueEnum};
use invalg::{limits, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

/// Partition invariants and the algebras of matrices commuting with a
/// permutation matrix.
#[derive(Debug, Parser)]
#[command(name = "invalg", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: GlobalOpts,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,

    /// Field characteristic: 0 or a prime.
    #[arg(long = "char", global = true, default_value_t = 0, value_name = "P")]
    pub characteristic: u64,

    /// Treat the field as not algebraically closed; disables structure results.
    #[arg(long, global = true)]
    pub not_closed: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Every invariant of a single partition, e.g. `analyze 8,2,1`.
    Analyze { partition: Partition },

    /// Equivalence, isomorphism and Morita verdicts for two partitions.
    Compare { lambda: Partition, mu: Partition },

    /// Isomorphism of the two invariant algebras.
    Iso { lambda: Partition, mu: Partition },

    /// Morita equivalence of the two invariant algebras.
    Morita { lambda: Partition, mu: Partition },

    /// Equivalence classes of P(s, n).
    Classify { s: usize, n: usize },

    /// Members of P(s, n) equivalent to no other member.
    SelfEquivalent { s: usize, n: usize },

    /// p(s, n), the number of classes, and the class-size histogram.
    Count { s: usize, n: usize },

    /// All partitions of n into exactly s parts.
    Enumerate { s: usize, n: usize },

    /// Cycle structure and commutant of a permutation in cycle notation.
    Perm {
        /// e.g. "(1 2 3)(4 5)"
        cycles: String,
        /// Degree; defaults to the largest point mentioned.
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, default_value_t = limits::DEFAULT_MATRIX_CAP)]
        matrix_cap: usize,
    },

    /// Cross-check every invariant against brute-force oracles.
    Verify {
        #[arg(long, default_value_t = 20)]
        nmax: usize,
        #[arg(long, default_value_t = limits::DEFAULT_MATRIX_CAP)]
        matrix_cap: usize,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}
