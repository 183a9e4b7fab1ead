mod cli;
mod commands;

use std::process::ExitCode;

use clap::Parser;

use cli::{Cli, Command};

/// Exit statuses shared by every subcommand.
pub mod status {
    pub const OK: u8 = 0;
    /// Invalid labeling or a solver/formula disagreement.
    pub const FAILED: u8 = 1;
    /// Usage, parse or I/O error.
    pub const USAGE: u8 = 2;
    /// Solver budget ran out before optimality was proven.
    pub const BUDGET: u8 = 3;
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(status::USAGE),
            };
        }
    };

    let result = match cli.command {
        Command::Order {
            graph,
            format,
            blocks,
        } => commands::order(&graph, format, blocks),
        Command::Verify { graph, labeling } => commands::verify(&graph, &labeling),
        Command::Rn {
            graph,
            certify,
            budget,
        } => commands::rn(&graph, certify, &budget.config()),
        Command::Solve {
            graph,
            budget,
            no_symmetry,
            witness,
        } => {
            let mut cfg = budget.config();
            cfg.symmetry_reduction = !no_symmetry;
            commands::solve(&graph, &cfg, witness.as_deref())
        }
        Command::Label {
            graph,
            certify,
            budget,
        } => commands::label(&graph, certify, &budget.config()),
        Command::Sweep {
            l_max,
            m_max,
            n_max,
            out,
            solve_limit,
            budget,
        } => commands::sweep(
            [l_max, m_max, n_max],
            out.as_deref(),
            solve_limit,
            &budget.config(),
        ),
    };

    match result {
        Ok(code) => ExitCode::from(code),
        Err(e)
            if e.downcast_ref::<std::io::Error>()
                .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe) =>
        {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(status::USAGE)
        }
    }
}
