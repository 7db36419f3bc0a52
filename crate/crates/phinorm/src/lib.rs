//! Alternating normal forms and the canonical well-ordering on positive
//! braid monoids.
//!
//! The crate decomposes positive braids along nested parabolic coverings,
//! computes the letterwise normal form attached to the canonical flip
//! covering, compares braids in the ShortLex well-ordering built from those
//! decompositions (which agrees with the standard left-invariant braid
//! order), decides the sign of arbitrary signed braid words in quadratic
//! time, and checks all of it against a brute-force rewriting oracle at
//! small scale.
//!
//! Module map:
//!
//! * [`word`] — braid words, the flip automorphism, the distinguished braids
//!   `Δ_n`, `δ_n`, `Δ̂_{n,d}`, parsing and formatting;
//! * [`garside`] — right greedy normal form over permutation simple factors,
//!   atom division by subword reversing, parabolic tails, word equivalence;
//! * [`covering`] — addresses together with their successors, covering
//!   skeletons, alternating and iterated decompositions, the generic
//!   letterwise normal form;
//! * [`splitting`] — splittings of braids and of words along the flip
//!   covering, exponent trees, splitting validity;
//! * [`phinormal`] — the flip-covering normal form with its trace, two
//!   independent normality checkers, and the 3-strand closed form;
//! * [`ordering`] — ShortLex comparison, the braid order (two redundant
//!   routes), the sign of a signed word, ordinal ranks on 3 strands;
//! * [`oracle`] — exhaustive equivalence classes and oracle versions of
//!   divisibility, equality and normality;
//! * [`walk`] — the random-walk statistics harness;
//! * [`verify`] — the cross-module oracle suite behind the `verify`
//!   subcommand.

pub mod covering;
pub mod error;
pub mod garside;
pub mod oracle;
pub mod ordering;
pub mod phinormal;
pub mod splitting;
pub mod verify;
pub mod walk;
pub mod word;

pub use error::{Error, Result};
pub use word::{Generator, PositiveBraidWord, SignedBraidWord};
