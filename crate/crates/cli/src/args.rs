use clap::{Args, Parser, Subcommand, ValueEnum};
use tworoots::Diagram;

use crate::format::ClassicalNumbering;

#[derive(Debug, Parser)]
#[command(name = "tworoots", version, about = "Exact computations with 2-roots of Y-shaped Weyl groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct DiagramArgs {
    /// Arm lengths of a Y-shaped diagram.
    #[arg(long, num_args = 3, value_names = ["A", "B", "C"])]
    pub y: Option<Vec<usize>>,
    /// Number of vertices of a path (type A).
    #[arg(long, value_name = "N")]
    pub path: Option<usize>,
}

impl DiagramArgs {
    pub fn diagram(&self) -> anyhow::Result<Diagram> {
        Ok(match (&self.y, self.path) {
            (Some(arms), _) => Diagram::y(arms[0], arms[1], arms[2])?,
            (None, Some(n)) => Diagram::path(n)?,
            (None, None) => anyhow::bail!("one of --y or --path is required"),
        })
    }
}

#[derive(Debug, Clone, Args)]
pub struct Output {
    /// Emit JSON instead of tables.
    #[arg(long)]
    pub json: bool,
    /// Print vertex labels in the classical D or E scheme.
    #[arg(long = "paper-numbering", visible_alias = "classical-numbering", value_enum, value_name = "X")]
    pub classical_numbering: Option<ClassicalNumbering>,
}

#[derive(Debug, Clone, Args)]
pub struct Target {
    #[command(flatten)]
    pub diagram: DiagramArgs,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Args)]
pub struct PairArgs {
    /// First component: coefficients "c0 c1 ..." or an ε-root such as e1-e3.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: String,
    /// Second component, in the same format.
    #[arg(long, allow_hyphen_values = true)]
    pub beta: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the canonical basis.
    Basis(Target),
    /// List positive real roots.
    Roots {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_name = "H")]
        height_bound: Option<i64>,
    },
    /// Orbits of 2-roots, or a height-truncated orbit in infinite types.
    Orbits {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_name = "H")]
        height_bound: Option<i64>,
        /// Basis element whose truncated orbit is listed in infinite types.
        #[arg(long, default_value_t = 0)]
        element: usize,
    },
    /// Highest 2-root of each orbit.
    Highest(Target),
    /// Canonical coordinates of a 2-root.
    Expand {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Matrix of a Weyl group element on canonical coordinates.
    Matrix {
        #[command(flatten)]
        target: Target,
        /// Simple reflections, leftmost applied last.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        word: String,
        /// Exit with status 1 unless every column has entries of one sign.
        #[arg(long)]
        check_sign_coherence: bool,
    },
    /// Decomposition of the symmetric square and radicals of the form.
    Decompose {
        #[command(flatten)]
        target: Target,
        /// Also reduce the Gram matrix modulo this prime.
        #[arg(long, value_name = "P")]
        prime: Option<u64>,
    },
    /// Kernels of the orbit representations.
    Kernel {
        #[command(flatten)]
        target: Target,
        /// Skip groups larger than this.
        #[arg(long, value_name = "M", default_value_t = 100_000)]
        max_order: u64,
    },
    /// Arc diagram of a 2-root and its expansion, in types A and D.
    Skein {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Run acceptance checks.
    Verify {
        #[arg(value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long)]
        json: bool,
        #[arg(long, value_name = "S", default_value_t = 0)]
        seed: u64,
        /// Largest group order for kernel closures.
        #[arg(long, value_name = "M", default_value_t = 100_000)]
        max_order: u64,
        /// Random words per diagram in the sign-coherence check.
        #[arg(long, default_value_t = 10_000)]
        words: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Basis,
    Orbits,
    Highest,
    Order,
    Coherence,
    Forms,
    Kernels,
    Identities,
    Skein,
    Witness,
    All,
}
