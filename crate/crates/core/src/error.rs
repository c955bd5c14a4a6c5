use crate::spectral::Domain;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("expected a {expected}-domain signal, got {found}")]
    WrongDomain { expected: Domain, found: Domain },

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: String, reason: String },

    #[error("{what} = {value} is not aligned to the frequency grid (dw = {dw})")]
    Misaligned { what: String, value: f64, dw: f64 },

    #[error("padding invariant violated: window {window} must divide the signal duration {span} into an integer number of copies")]
    Padding { window: f64, span: f64 },

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("intermediate level k = {k} sits on a resonant pole; enable pole skipping to exclude it")]
    ResonantPole { k: i64 },

    #[error("non-finite value produced by {0}")]
    NonFinite(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn param(name: &str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name: name.to_string(),
            reason: reason.into(),
        }
    }

    /// True for the errors a caller triggers by violating a numerical invariant
    /// (grid shape, alignment, padding, ranges), as opposed to I/O or parsing.
    pub fn is_invariant_violation(&self) -> bool {
        matches!(
            self,
            Error::InvalidGrid(_)
                | Error::GridMismatch(_)
                | Error::WrongDomain { .. }
                | Error::InvalidParameter { .. }
                | Error::Misaligned { .. }
                | Error::Padding { .. }
                | Error::OutOfRange(_)
                | Error::ResonantPole { .. }
        )
    }
}
