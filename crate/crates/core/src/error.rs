use thiserror::Error;

use crate::ordinal::Ordinal;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("base level {0} is below -1")]
    BadLevel(i32),
    #[error("{what} is undefined for zero")]
    Zero { what: &'static str },
    #[error("tower height must be at least 1")]
    TowerHeight,
    #[error("base eps_{base} is too small for {ordinal} (needs at least eps_{needed})")]
    BaseTooSmall {
        ordinal: Ordinal,
        base: i32,
        needed: i32,
    },
    #[error("{0} is not a limit ordinal")]
    NotLimit(Ordinal),
    #[error("fundamental sequence index must be at least 1")]
    ZeroIndex,
    #[error("{0}")]
    Precondition(String),
    #[error("step budget of {0} exhausted")]
    Budget(u64),
    #[error("enumeration exceeds cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown lemma id `{0}`")]
    UnknownLemma(String),
    #[error("bad parameter `{0}`")]
    BadParam(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
