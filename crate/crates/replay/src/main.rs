use std::path::PathBuf;
use std::process::ExitCode;

use burniat_replay::{render, run, Command, Options, ReplayError};
use clap::{Parser, Subcommand, ValueEnum};
use delpezzo::plane::parse_points;

#[derive(Parser)]
#[command(name = "burniat-replay", version, about = "Replay the lattice computations behind Burniat surfaces with K^2 = 4")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed for the random configurations certified by `burniat`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Five points, one `a b c` per line, replacing the built-in configuration.
    #[arg(long, global = true)]
    points: Option<PathBuf>,

    /// Number of non-degenerate random configurations (0 disables fuzzing).
    #[arg(long, global = true, default_value_t = 1000)]
    fuzz_samples: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Jsonl,
}

#[derive(Subcommand)]
enum Cmd {
    /// Enumerate lines and compare against a brute-force search.
    Lines {
        #[arg(long, default_value_t = 5)]
        n: usize,
    },
    /// Bound on disjoint (-4)-curves.
    Miyaoka,
    /// Ramification residuals R_1, R_2, R_3.
    Ramification,
    /// Double cover branched on three (-4)-curves.
    C1c2c3,
    /// Euler characteristics on S.
    Invariants,
    /// Double cover branched on F_1 + E_4 + E_5.
    Fijki,
    /// Double-fibre residual pairing.
    Step1,
    /// Branch classes, bidouble invariants and normal crossing certification.
    Burniat,
    /// Cremona witnesses and the Weyl orbit of e_1.
    Cremona,
    /// Exhaustive search for d with h^0(d) > 1 and -K - 2d effective.
    Ne1e,
    /// Betti number and rank-7 arithmetic.
    Finiteness,
    /// Every check, followed by the axiom ledger.
    All,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok((output, all_pass)) => {
            print!("{output}");
            if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn execute(cli: &Cli) -> Result<(String, bool), ReplayError> {
    let points = match &cli.points {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|source| ReplayError::Io { path: path.clone(), source })?;
            Some(parse_points(&text)?)
        }
        None => None,
    };
    let opts = Options { points, seed: cli.seed, fuzz_samples: cli.fuzz_samples };
    let cmd = match cli.command {
        Cmd::Lines { n } => Command::Lines { n },
        Cmd::Miyaoka => Command::Miyaoka,
        Cmd::Ramification => Command::Ramification,
        Cmd::C1c2c3 => Command::C1c2c3,
        Cmd::Invariants => Command::Invariants,
        Cmd::Fijki => Command::Fijki,
        Cmd::Step1 => Command::Step1,
        Cmd::Burniat => Command::Burniat,
        Cmd::Cremona => Command::Cremona,
        Cmd::Ne1e => Command::Ne1e,
        Cmd::Finiteness => Command::Finiteness,
        Cmd::All => Command::All,
    };
    let reports = run(cmd, &opts)?;
    let with_axioms = cmd == Command::All;
    let output = match cli.format {
        Format::Text => render::text(&reports, with_axioms),
        Format::Jsonl => render::jsonl(&reports, with_axioms),
    };
    Ok((output, reports.iter().all(|r| r.passed())))
}
