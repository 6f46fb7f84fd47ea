use thiserror::Error;

use crate::semiring::Semiring;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported shape: n = {n} ({reason})")]
    UnsupportedShape { n: u8, reason: &'static str },

    #[error("shape mismatch: n = {left} vs n = {right}")]
    ShapeMismatch { left: u8, right: u8 },

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("outer-product factor {0} is the zero vector")]
    ZeroFactor(usize),

    #[error("invalid direction {direction} for an array with n = {n}")]
    InvalidDirection { direction: usize, n: u8 },

    #[error(
        "{0} arrays have no canonical forms under a group action; \
         use the rank x ones partition instead"
    )]
    NotAField(Semiring),

    #[error("unknown table kind `{0}`")]
    UnknownTable(String),

    #[error("corrupt cache: {0}")]
    CorruptCache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
