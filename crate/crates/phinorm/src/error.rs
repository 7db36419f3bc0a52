//! Error type shared by the whole crate.

use thiserror::Error;

/// Errors reported by parsing, divisibility, covering and oracle routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A word literal could not be parsed.
    #[error("malformed word token {0:?}")]
    MalformedToken(String),

    /// A generator index was 0 or outside `1..=n-1`.
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: i64, strands: u16 },

    /// A strand count below 2 (or otherwise unusable) was requested.
    #[error("invalid strand count {0} (need n >= 2)")]
    InvalidStrands(u64),

    /// A parameter was outside its documented domain.
    #[error("{0}")]
    Domain(String),

    /// Two words that must live in the same monoid do not.
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(u16, u16),

    /// Right division was requested by a non-divisor.
    #[error("\u{3c3}_{0} is not a right divisor")]
    NotARightDivisor(u16),

    /// A signed word was used where a positive one is required.
    #[error("word contains inverse letters where a positive word is required")]
    NotPositive,

    /// A leaf sequence does not describe a covering of the monoid.
    #[error("not a covering: {0}")]
    NotACovering(String),

    /// The letterwise normal form needs a dense covering.
    #[error("covering is not dense; the letterwise normal form may not exist")]
    NotDense,

    /// An exponent tree does not match the covering skeleton.
    #[error("tree shape does not match the covering: {0}")]
    ShapeMismatch(String),

    /// An address successor index was out of range.
    #[error("successor index {index} exceeds address length {len}")]
    SuccessorOutOfRange { index: usize, len: usize },

    /// The exhaustive oracle refused a word beyond its configured bound.
    #[error("oracle bound exceeded: {0}")]
    BoundExceeded(String),

    /// Two redundant computation routes disagreed; this is a bug, not bad input.
    #[error("internal invariant breached: {0}")]
    Invariant(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
