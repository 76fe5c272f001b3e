use thiserror::Error;

use crate::root_data::Family;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group context `{0}` (expected <A|B|C|D>:<rank>)")]
    InvalidCtx(String),

    #[error("rank {rank} is not supported for type {family}: {reason}")]
    UnsupportedRank {
        family: Family,
        rank: usize,
        reason: &'static str,
    },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("operation requires type {expected}, got type {got}")]
    WrongFamily { expected: &'static str, got: Family },

    #[error("invalid signed permutation {0:?}")]
    InvalidSignedPerm(Vec<i32>),

    #[error("linear part {0:?} is not an element of the Weyl group of {1}")]
    NotInWeylGroup(Vec<i32>, String),

    #[error("invalid extended alcove: axiom {axiom} fails ({detail})")]
    InvalidAlcove { axiom: &'static str, detail: String },

    #[error("invalid affine root: {0}")]
    InvalidAffineRoot(String),

    #[error("guard exceeded: {what} is {value}, limit {limit} (raise with ALCOVE_LAB_GUARD)")]
    GuardExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("element is not μ-permissible")]
    NotPermissible,

    #[error("element is a translation element")]
    TranslationElement,

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::LengthMismatch { expected, got })
    }
}
