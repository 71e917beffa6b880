use thiserror::Error;

use crate::rational::{to_text, Rational};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("constant term must be 1 for inversion, got {}", to_text(.0))]
    NotUnit(Rational),
    #[error("{what} must be homogeneous of degree {expected}")]
    DegreeMismatch { what: &'static str, expected: u32 },
    #[error("input has nonzero terms below degree 3")]
    NotHomogeneous,
    #[error("unknown identity id {0:?}")]
    UnknownIdentity(String),
    #[error("sectional genus must be non-negative, got {0}")]
    NegativeGenus(String),
    /// A mathematical precondition failed (bounds, ranges).
    #[error("{0}")]
    Domain(String),
    #[error("scan box: {0}")]
    InvalidBox(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Errors caused by malformed requests rather than mathematics.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::UnknownIdentity(_) | Error::InvalidBox(_))
    }
}
