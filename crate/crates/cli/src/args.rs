use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "frustra",
    version,
    about = "Frustrated triangle counts, switching classes and exact spectra of small graphs",
    after_help = "Graphs are given in graph6 (short form) or as an edge list \"n; u-v, ...\". \
                  Use - or omit the argument to read the graph from stdin.\n\n\
                  Exit codes: 0 ok, 1 usage, 2 unparsable graph, 3 outside supported sizes, \
                  4 verification failure."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count frustrated triangles three ways and report e, p, q.
    Count(GraphArg),
    /// Place a value relative to the low intervals [a_t, b_t].
    Classify {
        #[arg(short = 'n', long)]
        n: u64,
        #[arg(short = 'f', long)]
        f: u64,
    },
    /// Exact t_G and a minimizing bipartition.
    Tg(GraphArg),
    /// Search for a switching equivalence between two graphs.
    Equiv {
        g: String,
        h: String,
    },
    /// Exact spectrum F_n.
    Spectrum {
        #[arg(short = 'n', long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = SpectrumMethod::Brute)]
        method: SpectrumMethod,
        #[command(flatten)]
        run: RunArgs,
        /// Print CSV tables instead of JSON.
        #[arg(long)]
        csv: bool,
    },
    /// Check a structural claim exhaustively; exits 4 if it fails.
    Verify {
        #[arg(long, value_enum)]
        check: Check,
        #[arg(short = 'n', long)]
        n: usize,
        #[command(flatten)]
        run: RunArgs,
        /// Clique steps examined by the thm2 check.
        #[arg(long, default_value_t = frustra_core::spectrum::THM2_DEFAULT_V1_STEPS)]
        v1_steps: usize,
    },
    /// Values of f over graphs with exactly t edges, for one or more orders.
    Restricted {
        #[arg(short = 't', long)]
        t: u64,
        #[arg(short = 'n', long)]
        n: u64,
        /// Last order of a range starting at n.
        #[arg(long)]
        to: Option<u64>,
    },
    /// Build a named graph and print its graph6 encoding.
    Construct(ConstructArgs),
    /// Interval endpoints a_t, b_t and distances to complete bipartite sizes.
    Table {
        #[arg(short = 'n', long)]
        n: u64,
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Debug, Args)]
pub struct GraphArg {
    /// graph6 string or edge list; - or nothing reads stdin.
    pub graph: Option<String>,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct RunArgs {
    /// Worker threads; output does not depend on it.
    #[arg(long, env = "FRUSTRA_THREADS", default_value_t = 1)]
    pub threads: usize,
    /// Allow the 2^28-graph walk at n = 8.
    #[arg(long)]
    pub allow_large: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpectrumMethod {
    Brute,
    Recursion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Gaps,
    Thm1,
    Thm3,
    Thm2,
    Parity,
    Symmetry,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Star,
    Matching,
    Kbip,
    CliqueMatching,
    Extremal,
    Thm2,
    Counterexample,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    #[arg(short = 'n', long)]
    pub n: Option<usize>,
    /// Star or matching size.
    #[arg(short = 't', long)]
    pub t: Option<usize>,
    /// Size of the first part of K_{x,n-x}.
    #[arg(short = 'x', long)]
    pub x: Option<usize>,
    /// Clique order.
    #[arg(short = 'r', long)]
    pub r: Option<usize>,
    /// Matching size next to the clique.
    #[arg(short = 'm', long)]
    pub m: Option<usize>,
    /// Edge count for extremal graphs.
    #[arg(short = 'e', long)]
    pub e: Option<u64>,
    /// Four-part family state i,j,k,l.
    #[arg(long, value_delimiter = ',')]
    pub state: Option<Vec<usize>>,
    /// Print graph6 lines only.
    #[arg(long)]
    pub plain: bool,
}
