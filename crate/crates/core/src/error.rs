use thiserror::Error;

use crate::field::FieldDescriptor;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch {
        expected: FieldDescriptor,
        found: FieldDescriptor,
    },

    #[error("invalid modulus {0}: must be a prime below 2^64")]
    InvalidModulus(String),

    #[error("characteristic {characteristic} too small: {requirement}")]
    CharacteristicTooSmall {
        characteristic: u64,
        requirement: String,
    },

    #[error("invalid problem: {0}")]
    InvalidSpec(String),

    #[error("alpha equals beta: all subresultants vanish and the requested quantity is undefined")]
    EqualRoots,

    #[error("unsupported characteristic {characteristic} for m={m}, n={n}, d={d}: requires {hypothesis}")]
    UnsupportedCharacteristic {
        characteristic: u64,
        m: u64,
        n: u64,
        d: u64,
        hypothesis: String,
    },

    #[error("unsupported parameters: {0}")]
    UnsupportedParameters(String),

    #[error("expected a result in the {expected} basis")]
    BasisMismatch { expected: &'static str },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("inexact polynomial division")]
    InexactDivision,
}
