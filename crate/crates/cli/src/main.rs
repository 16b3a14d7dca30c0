use std::io::Write;
use std::process::ExitCode;

use adjoint_powers::Partition;
use adjoint_powers_cli::{
    cmd_derangements, cmd_multiplicity, cmd_oracle, cmd_table, cmd_verify, CommandResult, Suite, TableFormat,
};
use clap::{Parser, Subcommand, ValueEnum};

/// Multiplicities in tensor powers of the adjoint representation of sl_n.
#[derive(Parser)]
#[command(name = "adjoint-powers", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Derangement numbers D_1..D_k by inclusion-exclusion and by recurrence.
    Derangements {
        #[arg(long, default_value_t = 8)]
        k: usize,
    },
    /// Full multiplicity table for sl_n^{⊗k}, n ≥ 2k, with its checksum.
    Table {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// One multiplicity m^k_{λ,μ}; partitions are comma lists, "" for ∅.
    Multiplicity {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
    },
    /// Decompose sl_n^{⊗k} from characters.
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Compare against the closed form.
        #[arg(long)]
        compare: bool,
    },
    /// Run a module's invariant checks.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Partitions,
    Brauer,
    Young,
    Tensor,
    All,
}

fn run(command: Command) -> CommandResult {
    match command {
        Command::Derangements { k } => cmd_derangements(k),
        Command::Table { k, format } => cmd_table(
            k,
            match format {
                Format::Json => TableFormat::Json,
                Format::Csv => TableFormat::Csv,
            },
        ),
        Command::Multiplicity { k, lambda, mu } => cmd_multiplicity(k, &lambda, &mu),
        Command::Oracle { n, k, compare } => cmd_oracle(n, k, compare),
        Command::Verify { suite, n, k } => {
            let suite = match suite {
                SuiteArg::Partitions => Suite::Partitions,
                SuiteArg::Brauer => Suite::Brauer,
                SuiteArg::Young => Suite::Young,
                SuiteArg::Tensor => Suite::Tensor,
                SuiteArg::All => Suite::All,
            };
            cmd_verify(suite, n, k)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli.command);
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(result.render().as_bytes());
    let _ = stdout.flush();
    eprintln!("status: {} ({} ms)", result.status, result.elapsed.as_millis());
    if let Some(w) = result.payload.get("warning").and_then(|w| w.as_str()) {
        eprintln!("warning: {w}");
    }
    if let Some(e) = result.payload.get("error").and_then(|e| e.as_str()) {
        eprintln!("error: {e}");
    }
    ExitCode::from(result.status.exit_code() as u8)
}
