use thiserror::Error;

use super::elem::RingId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("element of {found} used with {expected}")]
    ForeignElement { expected: RingId, found: RingId },

    #[error("ring {0} is not enumerable (arithmetic only)")]
    NotEnumerable(String),

    #[error("index {index} out of range for ring of size {size}")]
    IndexOutOfRange { index: u64, size: u64 },

    #[error("value is not an element of {ring}: {detail}")]
    NotAnElement { ring: String, detail: String },

    #[error("ring axiom `{law}` fails at {inputs}")]
    Axiom { law: String, inputs: String },

    #[error("invalid construction {what}: {reason}")]
    Construction { what: String, reason: String },

    #[error("invalid endomorphism {endo} on {ring}: `{law}` fails at {inputs}")]
    InvalidEndomorphism {
        endo: String,
        ring: String,
        law: String,
        inputs: String,
    },

    #[error("table file: {0}")]
    TableFormat(String),
}

impl RingError {
    pub fn construction(what: impl Into<String>, reason: impl Into<String>) -> RingError {
        RingError::Construction {
            what: what.into(),
            reason: reason.into(),
        }
    }
}

/// Failure while reading an element literal.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("element literal, column {column}: {message}")]
pub struct LiteralError {
    pub column: usize,
    pub message: String,
}
