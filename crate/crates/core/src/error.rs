use thiserror::Error;

/// Errors raised by the algebraic routines and the expression front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("generator index out of range: {index} (rank {rank})")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("not in U>=0: {0}")]
    NotInBorel(String),

    #[error("not a Hopf algebra: d = {d} <= d0 = {d0}")]
    NotHopf { d: u32, d0: u32 },

    #[error("scalar regimes do not match")]
    ContextMismatch,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
