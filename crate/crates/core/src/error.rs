use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("lattice rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("unsupported lattice with {n} blown-up points: {reason}")]
    Unsupported { n: usize, reason: &'static str },

    #[error("{0} is not a (-2)-root")]
    InvalidRoot(String),

    #[error("orbit exceeded the cap of {cap} classes")]
    OrbitCap { cap: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no single Cremona reflection moves {0} onto an exceptional curve e_i; try composing two reflections")]
    NoWitness(String),

    #[error("inconsistent branch data: {0}")]
    InconsistentBranch(String),

    #[error("{0} is not divisible by 2 in the Picard lattice")]
    NotDivisible(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
