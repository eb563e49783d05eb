mod angle;
mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use chinos_core::metric::{JointOrder, PairIndex};
use chinos_core::strategy::CandidateSpace;
use chinos_core::{ChinosError, Result};

use angle::parse_angle;
use render::Sink;

#[derive(Parser)]
#[command(
    name = "chinos",
    version,
    about = "Classical and quantum Chinos games: tables, sweeps, equilibria and hardware-style sampling"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Game {
    Classical,
    Boson,
    Hardcore,
    Qubit,
    TwoQubit,
}

impl Game {
    pub fn name(self) -> &'static str {
        match self {
            Game::Classical => "classical",
            Game::Boson => "boson",
            Game::Hardcore => "hardcore",
            Game::Qubit => "qubit",
            Game::TwoQubit => "two-qubit",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum Order {
    #[default]
    BobFirst,
    AliceFirst,
}

impl From<Order> for JointOrder {
    fn from(o: Order) -> Self {
        match o {
            Order::BobFirst => JointOrder::BobFirst,
            Order::AliceFirst => JointOrder::AliceFirst,
        }
    }
}

#[derive(clap::Args)]
struct Out {
    /// Output format.
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Write data here instead of stdout; the summary then goes to stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Per-move outcome probabilities and their average over a uniform opponent.
    Table {
        #[arg(long, value_enum)]
        game: Game,
        /// Radians or a closed form like `pi/4`.
        #[arg(long, value_parser = parse_angle, allow_hyphen_values = true)]
        theta: Option<f64>,
        #[command(flatten)]
        out: Out,
    },
    /// Averaged probabilities, or (P_A, P_B) for two qubits, on a theta grid.
    Sweep {
        #[arg(long, value_enum)]
        game: Game,
        #[arg(long, value_parser = parse_angle, allow_hyphen_values = true)]
        start: Option<f64>,
        #[arg(long, value_parser = parse_angle, allow_hyphen_values = true)]
        stop: Option<f64>,
        #[arg(long, default_value_t = 50)]
        points: usize,
        #[arg(long, value_enum, default_value_t)]
        order: Order,
        #[command(flatten)]
        out: Out,
    },
    /// Iterated best response, reported as JSON.
    Equilibrium {
        #[arg(long, value_enum)]
        game: Game,
        #[arg(long, value_parser = parse_angle, allow_hyphen_values = true)]
        theta: Option<f64>,
        #[arg(long, value_enum, default_value_t)]
        order: Order,
        #[arg(long, default_value_t = 20)]
        max_iters: usize,
        /// Also consider pure strategies as candidates.
        #[arg(long)]
        all_subsets: bool,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// The 16 x 16 two-qubit metric.
    Metric {
        #[arg(long, value_parser = parse_angle, allow_hyphen_values = true, default_value = "0")]
        theta: f64,
        #[arg(long, value_enum, default_value_t)]
        order: Order,
        #[command(flatten)]
        out: Out,
    },
    /// Finite-shot estimates of |G|^2 with optional depolarizing noise.
    Shots {
        #[arg(long, value_parser = parse_angle, allow_hyphen_values = true, default_value = "0")]
        theta: f64,
        /// One entry as `row,col`, e.g. `22,30`; all 256 when omitted.
        #[arg(long, value_parser = parse_entry)]
        entry: Option<(PairIndex, PairIndex)>,
        #[arg(long, default_value_t = 8192)]
        shots: u64,
        #[arg(long, env = "CHINOS_SEED", default_value_t = 0)]
        seed: u64,
        /// Per-layer depolarizing probability.
        #[arg(long)]
        depolarizing: Option<f64>,
        /// Fit the depolarizing probability so the entry's population hits this value.
        #[arg(long)]
        calibrate: Option<f64>,
        #[command(flatten)]
        out: Out,
    },
    /// Error report of a measured metric table against theory, as JSON.
    Compare {
        #[arg(long)]
        exp: PathBuf,
        #[arg(long, value_parser = parse_angle, allow_hyphen_values = true, default_value = "0")]
        theta: f64,
        /// Largest measured modulus still treated as orthogonal.
        #[arg(long, default_value_t = 0.25)]
        threshold: f64,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

fn parse_entry(s: &str) -> std::result::Result<(PairIndex, PairIndex), String> {
    let parts: Vec<&str> = s.split([',', ';', ' ']).filter(|p| !p.is_empty()).collect();
    match parts[..] {
        [r, c] => Ok((
            r.parse().map_err(|e: ChinosError| e.to_string())?,
            c.parse().map_err(|e: ChinosError| e.to_string())?,
        )),
        _ => Err(format!("expected `row,col` such as 22,30, got {s:?}")),
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Table { game, theta, out } => commands::table(game, theta, out.format, &Sink { output: out.output }),
        Command::Sweep {
            game,
            start,
            stop,
            points,
            order,
            out,
        } => commands::sweep(
            game,
            &commands::SweepSpec { start, stop, points },
            order.into(),
            out.format,
            &Sink { output: out.output },
        ),
        Command::Equilibrium {
            game,
            theta,
            order,
            max_iters,
            all_subsets,
            output,
        } => {
            let space = if all_subsets {
                CandidateSpace::AllSubsets
            } else {
                CandidateSpace::Mixed
            };
            commands::equilibrium(game, theta, order.into(), max_iters, space, &Sink { output })
        }
        Command::Metric { theta, order, out } => {
            commands::metric(theta, order.into(), out.format, &Sink { output: out.output })
        }
        Command::Shots {
            theta,
            entry,
            shots,
            seed,
            depolarizing,
            calibrate,
            out,
        } => commands::shots(
            &commands::ShotsArgs {
                theta,
                entry,
                shots,
                seed,
                depolarizing,
                calibrate,
            },
            out.format,
            &Sink { output: out.output },
        ),
        Command::Compare {
            exp,
            theta,
            threshold,
            output,
        } => commands::compare(&exp, theta, threshold, &Sink { output }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_data_error() { 3 } else { 2 })
        }
    }
}
