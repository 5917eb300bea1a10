//! Replays the lattice arithmetic behind Burniat surfaces with `K^2 = 4` and
//! their bicanonical map onto the quartic del Pezzo surface. Every check
//! returns a [`CheckReport`]; facts that cannot be computed are listed in
//! [`axioms`].

pub mod axioms;
pub mod checks;
pub mod error;
pub mod render;

use delpezzo::plane::{default_points, ProjPoint};
use delpezzo::report::CheckReport;

pub use error::{ReplayError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Lines { n: usize },
    Miyaoka,
    Ramification,
    C1c2c3,
    Invariants,
    Fijki,
    Step1,
    Burniat,
    Cremona,
    Ne1e,
    Finiteness,
    All,
}

#[derive(Clone, Debug)]
pub struct Options {
    /// Burniat configuration; `None` uses the built-in one.
    pub points: Option<Vec<ProjPoint>>,
    pub seed: u64,
    /// Non-degenerate random configurations to certify; 0 skips fuzzing.
    pub fuzz_samples: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options { points: None, seed: 0, fuzz_samples: 1000 }
    }
}

/// Runs one command. `All` returns the reports in a fixed order.
pub fn run(cmd: Command, opts: &Options) -> Result<Vec<CheckReport>> {
    use checks::*;
    Ok(match cmd {
        Command::Lines { n } => vec![check_lines(n)?],
        Command::Miyaoka => vec![check_miyaoka()],
        Command::Ramification => check_ramification(),
        Command::C1c2c3 => vec![check_c1c2c3()?],
        Command::Invariants => vec![check_invariants()?],
        Command::Fijki => vec![check_fijki()?],
        Command::Step1 => vec![check_step1()?],
        Command::Burniat => {
            let points = opts.points.clone().unwrap_or_else(|| default_points().to_vec());
            vec![check_burniat(&points, opts.seed, opts.fuzz_samples)?]
        }
        Command::Cremona => vec![check_cremona()?],
        Command::Ne1e => vec![check_ne1e()?],
        Command::Finiteness => vec![check_finiteness()?],
        Command::All => {
            let mut out = Vec::new();
            for c in [
                Command::Lines { n: 5 },
                Command::Finiteness,
                Command::Miyaoka,
                Command::Ramification,
                Command::C1c2c3,
                Command::Ne1e,
                Command::Invariants,
                Command::Fijki,
                Command::Step1,
                Command::Cremona,
                Command::Burniat,
            ] {
                out.extend(run(c, opts)?);
            }
            out
        }
    })
}
