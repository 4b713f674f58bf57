//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero: {0}")]
    DivisionByZero(&'static str),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("cannot combine words over different alphabets ({0} vs {1} generators)")]
    AlphabetMismatch(usize, usize),

    #[error("expected {expected} generator images, got {got}")]
    ImageCount { expected: usize, got: usize },

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("invalid two-bridge parameters ({p}, {q}): {reason}")]
    InvalidKnot { p: u64, q: u64, reason: String },

    #[error("invalid surgery coefficient: {0}")]
    InvalidSurgery(String),

    #[error("invalid family parameters (N={n_family}, k={k}): 10k-1 = {numerator} is not divisible by 7 (need k = 5 mod 7)")]
    InvalidFamily { n_family: u64, k: u64, numerator: i64 },

    #[error("element {element} out of range for a group of order {order}")]
    Membership { element: usize, order: usize },

    #[error("homomorphism search supports exactly 2 generators; the presentation has {0}")]
    UnsupportedArity(usize),

    #[error("target group order {order} exceeds the search bound {bound}")]
    ResourceBound { order: usize, bound: usize },

    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),

    #[error("certificate integrity: {0}")]
    CertificateIntegrity(String),

    #[error("lift precondition failed: relator {relator} does not map to the identity of the finite group")]
    LiftPrecondition { relator: String },

    #[error("word does not evaluate to a translation: group part is {0}")]
    NotATranslation(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
