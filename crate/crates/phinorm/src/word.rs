//! Braid words and the distinguished braids built from them.
//!
//! A positive braid word over `n` strands is a sequence of Artin generators
//! `σ_1 .. σ_{n-1}`. Because the defining relations are homogeneous, word
//! length is an invariant of the braid, which the rest of the crate leans on
//! constantly. Signed words additionally carry inverse letters and are the
//! input currency of the order-sign decision.
//!
//! The wire format is whitespace- or comma-separated signed decimal integers:
//! `+i` (or `i`) is `σ_i`, `-i` is `σ_i^{-1}`. The strand count can be given
//! explicitly or inferred as `1 + max |i|`.

use std::fmt;

use crate::error::{Error, Result};

/// An Artin generator `σ_i`, 1-indexed as in the presentation of the monoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator(u16);

impl Generator {
    /// Creates `σ_index`; the index must be at least 1.
    pub fn new(index: u16) -> Result<Self> {
        if index == 0 {
            return Err(Error::IndexOutOfRange {
                index: 0,
                strands: 0,
            });
        }
        Ok(Generator(index))
    }

    /// 1-based generator index `i` of `σ_i`.
    pub fn index(self) -> u16 {
        self.0
    }

    /// Image under the flip automorphism of the `n`-strand monoid.
    pub fn flip(self, strands: u16) -> Generator {
        Generator(strands - self.0)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A positive braid word: an element of the free monoid on `σ_1 .. σ_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositiveBraidWord {
    strands: u16,
    letters: Vec<u16>,
}

impl PositiveBraidWord {
    /// The empty word, representing the trivial braid on `n` strands.
    pub fn empty(strands: u16) -> Result<Self> {
        check_strands(strands)?;
        Ok(PositiveBraidWord {
            strands,
            letters: Vec::new(),
        })
    }

    /// Builds a word from 1-based letter indices, checking bounds.
    pub fn from_indices(strands: u16, letters: impl IntoIterator<Item = u16>) -> Result<Self> {
        check_strands(strands)?;
        let letters: Vec<u16> = letters.into_iter().collect();
        for &i in &letters {
            if i == 0 || i >= strands {
                return Err(Error::IndexOutOfRange {
                    index: i as i64,
                    strands,
                });
            }
        }
        Ok(PositiveBraidWord { strands, letters })
    }

    pub fn strands(&self) -> u16 {
        self.strands
    }

    /// Letters as 1-based indices, leftmost first.
    pub fn letters(&self) -> &[u16] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Reinterprets the word over a different strand count.
    ///
    /// Widening always succeeds; narrowing fails if a letter goes out of range.
    pub fn with_strands(&self, strands: u16) -> Result<Self> {
        PositiveBraidWord::from_indices(strands, self.letters.iter().copied())
    }

    /// Letterwise image under the flip automorphism `σ_i -> σ_{n-i}`.
    pub fn flip(&self) -> Self {
        let n = self.strands;
        PositiveBraidWord {
            strands: n,
            letters: self.letters.iter().map(|&i| n - i).collect(),
        }
    }

    /// Word reversal, the anti-automorphism fixing every generator.
    pub fn rev(&self) -> Self {
        let mut letters = self.letters.clone();
        letters.reverse();
        PositiveBraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &PositiveBraidWord) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(PositiveBraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// `self` repeated `e` times.
    pub fn pow(&self, e: u32) -> Self {
        let mut letters = Vec::with_capacity(self.letters.len() * e as usize);
        for _ in 0..e {
            letters.extend_from_slice(&self.letters);
        }
        PositiveBraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Appends one letter on the right, in place.
    pub fn push(&mut self, g: Generator) -> Result<()> {
        if g.index() == 0 || g.index() >= self.strands {
            return Err(Error::IndexOutOfRange {
                index: g.index() as i64,
                strands: self.strands,
            });
        }
        self.letters.push(g.index());
        Ok(())
    }

    /// True when every letter index lies in `set`.
    pub fn lies_in(&self, set: impl Fn(u16) -> bool) -> bool {
        self.letters.iter().all(|&i| set(i))
    }

    pub(crate) fn from_raw(strands: u16, letters: Vec<u16>) -> Self {
        PositiveBraidWord { strands, letters }
    }
}

impl fmt::Display for PositiveBraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &i in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{i}")?;
            first = false;
        }
        Ok(())
    }
}

/// One letter of a signed word: a generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedLetter {
    pub gen: Generator,
    pub positive: bool,
}

/// A braid word allowed to contain inverse letters; represents an element of
/// the braid group rather than the monoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedBraidWord {
    strands: u16,
    letters: Vec<SignedLetter>,
}

impl SignedBraidWord {
    pub fn empty(strands: u16) -> Result<Self> {
        check_strands(strands)?;
        Ok(SignedBraidWord {
            strands,
            letters: Vec::new(),
        })
    }

    /// Builds a signed word from nonzero signed indices.
    pub fn from_signed_indices(
        strands: u16,
        letters: impl IntoIterator<Item = i32>,
    ) -> Result<Self> {
        check_strands(strands)?;
        let mut out = Vec::new();
        for v in letters {
            let idx = v.unsigned_abs();
            if v == 0 || idx >= strands as u32 {
                return Err(Error::IndexOutOfRange {
                    index: v as i64,
                    strands,
                });
            }
            out.push(SignedLetter {
                gen: Generator(idx as u16),
                positive: v > 0,
            });
        }
        Ok(SignedBraidWord {
            strands,
            letters: out,
        })
    }

    pub fn strands(&self) -> u16 {
        self.strands
    }

    pub fn letters(&self) -> &[SignedLetter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Converts to a positive word, failing if any inverse letter occurs.
    pub fn to_positive(&self) -> Result<PositiveBraidWord> {
        if self.letters.iter().any(|l| !l.positive) {
            return Err(Error::NotPositive);
        }
        Ok(PositiveBraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|l| l.gen.index()).collect(),
        })
    }

    /// The formal group inverse: reverse the word and invert every letter.
    pub fn inverse(&self) -> SignedBraidWord {
        SignedBraidWord {
            strands: self.strands,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| SignedLetter {
                    gen: l.gen,
                    positive: !l.positive,
                })
                .collect(),
        }
    }
}

impl From<PositiveBraidWord> for SignedBraidWord {
    fn from(w: PositiveBraidWord) -> Self {
        SignedBraidWord {
            strands: w.strands,
            letters: w
                .letters
                .into_iter()
                .map(|i| SignedLetter {
                    gen: Generator(i),
                    positive: true,
                })
                .collect(),
        }
    }
}

impl fmt::Display for SignedBraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            if l.positive {
                write!(f, "{}", l.gen.index())?;
            } else {
                write!(f, "-{}", l.gen.index())?;
            }
            first = false;
        }
        Ok(())
    }
}

fn check_strands(strands: u16) -> Result<()> {
    if strands < 2 {
        return Err(Error::InvalidStrands(strands as u64));
    }
    Ok(())
}

/// Parses the wire format into a signed word.
///
/// When `strands` is `None` it is inferred as `1 + max |i|`, with a floor of 2
/// so the empty word still lives somewhere.
pub fn parse(text: &str, strands: Option<u16>) -> Result<SignedBraidWord> {
    let mut values: Vec<i32> = Vec::new();
    for token in text.split(|c: char| c.is_whitespace() || c == ',') {
        if token.is_empty() {
            continue;
        }
        let v: i64 = token
            .parse()
            .map_err(|_| Error::MalformedToken(token.to_string()))?;
        if v == 0 {
            return Err(Error::IndexOutOfRange {
                index: 0,
                strands: strands.unwrap_or(0),
            });
        }
        if v.unsigned_abs() > u16::MAX as u64 - 1 {
            return Err(Error::MalformedToken(token.to_string()));
        }
        values.push(v as i32);
    }
    let n = match strands {
        Some(n) => n,
        None => {
            let max = values.iter().map(|v| v.unsigned_abs()).max().unwrap_or(1);
            (max + 1).max(2) as u16
        }
    };
    SignedBraidWord::from_signed_indices(n, values)
}

/// Parses the wire format, additionally requiring every letter be positive.
pub fn parse_positive(text: &str, strands: Option<u16>) -> Result<PositiveBraidWord> {
    parse(text, strands)?.to_positive()
}

/// The chosen positive word for the Garside element `Δ_n`, via the recursion
/// `Δ_2 = σ_1`, `Δ_n = σ_1 ... σ_{n-1} Δ_{n-1}`.
pub fn delta(n: u16) -> Result<PositiveBraidWord> {
    check_strands(n)?;
    let mut letters = Vec::new();
    for m in (2..=n).rev() {
        letters.extend(1..m);
    }
    Ok(PositiveBraidWord {
        strands: n,
        letters,
    })
}

/// The descending run `δ_n = σ_{n-1} ... σ_1`.
pub fn delta_small(n: u16) -> Result<PositiveBraidWord> {
    check_strands(n)?;
    Ok(PositiveBraidWord {
        strands: n,
        letters: (1..n).rev().collect(),
    })
}

/// The zigzag `Δ̂_{n,d} = Φ_n^d(δ_n) ··· Φ_n^2(δ_n) · Φ_n(δ_n)`.
///
/// A word of length `d(n-1)` consisting of `d` alternating runs and finishing
/// with `σ_{n-1}`; it satisfies `Δ_n^d = Δ̂_{n,d} Δ_{n-1}^d`.
pub fn delta_hat(n: u16, d: u32) -> Result<PositiveBraidWord> {
    check_strands(n)?;
    if d < 1 {
        return Err(Error::Domain("delta_hat needs d >= 1".into()));
    }
    let descending = delta_small(n)?;
    let ascending = descending.flip();
    let mut letters = Vec::with_capacity(d as usize * (n as usize - 1));
    for k in (1..=d).rev() {
        let run = if k % 2 == 0 { &descending } else { &ascending };
        letters.extend_from_slice(run.letters());
    }
    Ok(PositiveBraidWord {
        strands: n,
        letters,
    })
}
