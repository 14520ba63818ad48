//! Argument surface of the `majorder` binary.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "majorder",
    version,
    about = "Majorization order, exact power-product arithmetic, and desk-scale theorem verification",
    disable_help_subcommand = true
)]
pub struct Cli {
    /// Config file with all defaults; ./majorder.toml is picked up when present.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    /// Report format on stdout.
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,

    /// Worker threads for verification sweeps; reports merge deterministically.
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,

    /// Interval escalation cap in bits; overrides MAJORDER_MAX_PRECISION.
    #[arg(long, global = true, value_name = "BITS")]
    pub max_precision: Option<u32>,

    #[command(subcommand)]
    pub command: Cmd,
}

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Compare two sequences under the majorization order.
    Majorize {
        /// First sequence, comma-separated positive integers, e.g. "3,1".
        first: String,
        /// Second sequence in the same format.
        second: String,
    },
    /// List canonical sequences in deterministic order.
    Enumerate {
        /// Largest total sum to include.
        #[arg(long, value_name = "S")]
        max_sum: Option<u64>,
        /// Optional length cap.
        #[arg(long, value_name = "L")]
        max_len: Option<usize>,
    },
    /// Run one equation solver and report every solution it finds.
    Solve {
        /// Equation name, e.g. pow-plus or prod-minus; the README lists all twelve.
        equation: String,
        /// Sequence-sum bound, or grid bound for rectangular equations.
        bound: Option<u64>,
    },
    /// Run a named verification suite.
    Verify {
        /// One of: poset-axioms, theorem-a, theorem-b, theorem-c, fibonacci,
        /// recurrence, uniqueness.
        suite: String,
        /// Pair-sweep sum bound where the suite takes one.
        #[arg(long, value_name = "S")]
        max_sum: Option<u64>,
        /// Certificate range for the monotonicity profiles.
        #[arg(long, value_name = "X")]
        x_max: Option<u64>,
        /// Index bound for the Fibonacci inequalities.
        #[arg(long, value_name = "N")]
        n_max: Option<u64>,
        /// Restrict theorem-a to one catalog map.
        #[arg(long, value_name = "NAME")]
        map: Option<String>,
        /// Dense-grid sweep for theorem-c: first point.
        #[arg(long, value_name = "X")]
        grid_start: Option<String>,
        /// Dense-grid sweep for theorem-c: last point.
        #[arg(long, value_name = "X")]
        grid_end: Option<String>,
        /// Dense-grid sweep for theorem-c: step between points.
        #[arg(long, value_name = "DX")]
        grid_step: Option<String>,
        /// Term source for the uniqueness suite: fib-even, fib-odd, recurrence.
        #[arg(long, value_name = "NAME")]
        source: Option<String>,
        /// Largest term index for uniqueness searches.
        #[arg(long, value_name = "N")]
        max_index: Option<u64>,
        /// Longest index tuple for uniqueness searches.
        #[arg(long, value_name = "L")]
        max_tuple_len: Option<usize>,
        /// Recurrence coefficient a (with --b and --a1 selects one spec).
        #[arg(long, value_name = "A")]
        a: Option<u64>,
        /// Recurrence coefficient b, negative.
        #[arg(long, value_name = "B", allow_hyphen_values = true)]
        b: Option<i64>,
        /// Recurrence start value A1.
        #[arg(long, value_name = "A1")]
        a1: Option<u64>,
    },
    /// Search for equal term products over majorizing index tuples.
    Uniqueness {
        /// Term source: fib-even, fib-odd, or recurrence (with --a --b --a1).
        source: String,
        /// Largest term index to combine into products.
        #[arg(long, value_name = "N")]
        max_index: Option<u64>,
        /// Longest index tuple to consider.
        #[arg(long, value_name = "L")]
        max_tuple_len: Option<usize>,
        /// Recurrence coefficient a (with --b and --a1 selects one spec).
        #[arg(long, value_name = "A")]
        a: Option<u64>,
        /// Recurrence coefficient b, negative.
        #[arg(long, value_name = "B", allow_hyphen_values = true)]
        b: Option<i64>,
        /// Recurrence start value A1.
        #[arg(long, value_name = "A1")]
        a1: Option<u64>,
    },
    /// Evaluate rigorous log-Gamma and digamma enclosures at a rational point.
    Gamma {
        /// Point x > 0 as an integer, decimal, fraction p/q, or the letter e.
        x: String,
        /// Working precision in bits.
        #[arg(long, value_name = "BITS")]
        precision: Option<u32>,
    },
    /// Print a Fibonacci number in the F0 = F1 = 1 convention.
    Fib {
        /// Index n >= 0.
        n: u64,
    },
}
