use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hamming_radio::SolverConfig;

/// Radio labelings of Hamming graphs K_n1 x K_n2 x ... given as "2x3x3".
#[derive(Debug, Parser)]
#[command(name = "hradio", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the consecutive ordering of K_l x K_m x K_n.
    Order {
        graph: String,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Group rows by matrix block.
        #[arg(long)]
        blocks: bool,
    },
    /// Check a "vertex,label" CSV file against the radio condition.
    Verify { graph: String, labeling: PathBuf },
    /// Print the closed-form radio number of a diameter-3 Hamming graph.
    Rn {
        graph: String,
        /// Also run the exact solver and compare.
        #[arg(long)]
        certify: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Compute the radio number exactly by branch-and-bound.
    Solve {
        graph: String,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Do not restrict the search by graph automorphisms.
        #[arg(long)]
        no_symmetry: bool,
        /// Write the witness labeling to this CSV file.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Print a labeling attaining the radio number as "vertex,label" CSV.
    Label {
        graph: String,
        #[arg(long)]
        certify: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Tabulate formula, gracefulness and solver values over l <= m <= n.
    Sweep {
        l_max: usize,
        m_max: usize,
        n_max: usize,
        /// Output CSV file (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Largest vertex count handed to the exact solver.
        #[arg(long, default_value_t = 18)]
        solve_limit: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct BudgetArgs {
    /// Maximum number of search nodes.
    #[arg(long, env = "HRADIO_NODE_BUDGET", default_value_t = 5_000_000_000)]
    pub node_budget: u64,
    /// Wall-clock limit in seconds.
    #[arg(long, env = "HRADIO_TIME_BUDGET", default_value_t = 300.0)]
    pub time_budget: f64,
}

impl BudgetArgs {
    pub fn config(&self) -> SolverConfig {
        SolverConfig {
            node_budget: self.node_budget,
            time_budget: Duration::from_secs_f64(self.time_budget.max(0.0)),
            ..SolverConfig::default()
        }
    }
}
