use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use sandpile_cli::commands::{self, Board, CliError, Format, Method, StartConfig};

#[derive(Parser)]
#[command(name = "sandpile", about = "Symmetric sandpiles, domino tilings and sandpile group orders")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Count recurrents fixed by the horizontal and vertical flips.
    CountSymmetric {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long, value_enum, default_value = "det")]
        method: Method,
    },
    /// Weighted domino tiling count of a board.
    CountTilings {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long, value_enum, default_value = "plain")]
        board: Board,
        #[arg(long)]
        enumerate: bool,
    },
    /// Order of a constant configuration in the grid's sandpile group.
    Order {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long, value_enum, default_value = "all-twos")]
        config: StartConfig,
    },
    /// Write the identity element of the grid.
    Identity {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "pgm")]
        format: Format,
    },
    /// Cross-check every counting method up to the given sizes.
    Verify {
        #[arg(long)]
        max_m: usize,
        #[arg(long)]
        max_n: usize,
    },
    /// Sandpile group orders of the triangular graphs P_1..P_N.
    ASeq {
        #[arg(long)]
        n: usize,
    },
}

fn run(cmd: Cmd) -> Result<serde_json::Value, CliError> {
    match cmd {
        Cmd::CountSymmetric { rows, cols, method } => commands::count_symmetric(rows, cols, method),
        Cmd::CountTilings { rows, cols, board, enumerate } => commands::count_tilings(rows, cols, board, enumerate),
        Cmd::Order { rows, cols, config } => commands::order(rows, cols, config),
        Cmd::Identity { rows, cols, out, format } => commands::write_identity(rows, cols, &out, format),
        Cmd::Verify { max_m, max_n } => commands::verify(max_m, max_n),
        Cmd::ASeq { n } => commands::a_sequence(n),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(v) => {
            println!("{v}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            if let CliError::Disagree(v) = &e {
                println!("{v}");
                if let Some(rows) = v["rows"].as_array() {
                    for r in rows.iter().filter(|r| r["agree"] == false) {
                        eprintln!("disagreement: {r}");
                    }
                }
            }
            eprintln!("sandpile: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
