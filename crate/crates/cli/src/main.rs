use std::io::Write;
use std::process::ExitCode;

use chromix::Theorem;
use chromix_cli::commands::{self, CliError, Format, Output, EXIT_INPUT};
use clap::{Parser, Subcommand, ValueEnum};

/// Exact chromatic polynomials of mixed graphs and reciprocity checks.
///
/// Graph files use the line format (`vertex a`, `edge a b`, `arc a b`) or,
/// for `.dot`/`.gv` files, a DOT subset. Pass `-` to read standard input.
/// Exit codes: 0 success, 1 verification failed, 2 input or usage error.
#[derive(Parser)]
#[command(name = "chromix", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Lines,
    Dot,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Lines => Format::Lines,
            FormatArg::Dot => Format::Dot,
        }
    }
}

#[derive(clap::Args)]
struct GraphInput {
    /// Graph file, or `-` for standard input.
    file: String,
    /// Input format; guessed from the extension when omitted.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

impl GraphInput {
    fn load(&self) -> Result<chromix::MixedGraph, CliError> {
        commands::load_graph(&self.file, self.format.map(Format::from))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the chromatic polynomial and its values at k = 1..=|V|+1.
    Poly {
        #[command(flatten)]
        input: GraphInput,
        /// Strong polynomial (strict inequality along arcs).
        #[arg(long)]
        strong: bool,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the chromatic polynomial at one integer.
    Eval {
        #[command(flatten)]
        input: GraphInput,
        #[arg(short, allow_negative_numbers = true)]
        k: i64,
        #[arg(long)]
        strong: bool,
        /// Also print (-1)^|V| times the value.
        #[arg(long)]
        signed: bool,
    },
    /// List the orientations of the graph's edges.
    Orientations {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        acyclic_only: bool,
        /// Add a column with the intercompatible coloring count.
        #[arg(short)]
        k: Option<i64>,
    },
    /// Compare (-1)^|V| χ(-k) with the coloring/orientation pair count.
    Reciprocity {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = 3)]
        kmax: i64,
        /// Strong reciprocity (compatible orientations).
        #[arg(long)]
        strong: bool,
        /// Run the weak check on graphs that are not acyclic mixed.
        #[arg(long)]
        force: bool,
        #[arg(long)]
        json: bool,
    },
    /// Order polynomials of a labeled poset and of its complementary labeling.
    OrderPoly {
        /// Poset file (`elem`, `rel`, `label` lines), or `-`.
        file: String,
        #[arg(long, default_value_t = 3)]
        kmax: i64,
        #[arg(long)]
        json: bool,
    },
    /// Check one identity on every labeled instance of a given size.
    Verify {
        /// Accepted for clarity; every sweep is exhaustive.
        #[arg(long)]
        exhaustive: bool,
        #[arg(short)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        kmax: i64,
        #[arg(long, value_parser = parse_theorem)]
        theorem: Theorem,
        #[arg(long)]
        json: bool,
    },
}

fn parse_theorem(s: &str) -> Result<Theorem, String> {
    Theorem::from_name(s).ok_or_else(|| {
        let names: Vec<&str> = Theorem::ALL.iter().map(|t| t.name()).collect();
        format!("unknown theorem; expected weak, strong or one of {}", names.join(", "))
    })
}

fn run(command: Command) -> Result<Output, CliError> {
    match command {
        Command::Poly {
            input,
            strong,
            json,
        } => Ok(commands::cmd_poly(&input.load()?, &input.file, strong, json)),
        Command::Eval {
            input,
            k,
            strong,
            signed,
        } => Ok(commands::cmd_eval(&input.load()?, k, strong, signed)),
        Command::Orientations {
            input,
            acyclic_only,
            k,
        } => commands::cmd_orientations(&input.load()?, acyclic_only, k),
        Command::Reciprocity {
            input,
            kmax,
            strong,
            force,
            json,
        } => commands::cmd_reciprocity(&input.load()?, &input.file, kmax, strong, force, json),
        Command::OrderPoly { file, kmax, json } => {
            commands::cmd_order_poly(&commands::load_poset(&file)?, &file, kmax, json)
        }
        Command::Verify {
            exhaustive: _,
            n,
            kmax,
            theorem,
            json,
        } => commands::cmd_verify(n, kmax, theorem, json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(EXIT_INPUT as u8);
            }
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            if matches!(e, CliError::Refused(chromix::Error::NotAcyclicMixed)) {
                eprintln!("hint: pass --force to run the check anyway");
            }
            ExitCode::from(EXIT_INPUT as u8)
        }
    }
}
