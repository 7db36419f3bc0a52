//! Ground truth by exhaustion.
//!
//! Because the defining relations are homogeneous, the set of positive words
//! representing a given braid is finite: it is the closure of any one word
//! under single applications of `σ_i σ_j = σ_j σ_i` (`|i-j| >= 2`) and
//! `σ_i σ_j σ_i = σ_j σ_i σ_j` (`|i-j| = 1`). Everything here enumerates that
//! closure and answers questions by inspection. It is deliberately slow and
//! independent of the permutation engine; the two must agree wherever both
//! are defined.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::splitting;
use crate::word::{Generator, PositiveBraidWord};

/// Hard cap on class size; exceeding it is an explicit error, never a
/// silent truncation.
const MAX_CLASS_SIZE: usize = 8_000_000;

/// Default word-length bound per strand count.
pub fn default_bound(strands: u16) -> usize {
    match strands {
        0..=2 => 64,
        3 => 12,
        4 => 9,
        5 => 8,
        _ => 7,
    }
}

/// The full set of positive words equivalent to a given one.
#[derive(Debug, Clone)]
pub struct EquivalenceClass {
    strands: u16,
    words: BTreeSet<Vec<u16>>,
}

impl EquivalenceClass {
    pub fn strands(&self) -> u16 {
        self.strands
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &PositiveBraidWord) -> bool {
        self.words.contains(w.letters())
    }

    pub fn iter(&self) -> impl Iterator<Item = PositiveBraidWord> + '_ {
        self.words
            .iter()
            .map(|ls| PositiveBraidWord::from_raw(self.strands, ls.clone()))
    }
}

fn neighbours(word: &[u16], out: &mut Vec<Vec<u16>>) {
    out.clear();
    for p in 0..word.len().saturating_sub(1) {
        let (a, b) = (word[p], word[p + 1]);
        if a.abs_diff(b) >= 2 {
            let mut v = word.to_vec();
            v.swap(p, p + 1);
            out.push(v);
        }
    }
    for p in 0..word.len().saturating_sub(2) {
        let (a, b, c) = (word[p], word[p + 1], word[p + 2]);
        if a == c && a.abs_diff(b) == 1 {
            let mut v = word.to_vec();
            v[p] = b;
            v[p + 1] = a;
            v[p + 2] = b;
            out.push(v);
        }
    }
}

/// Breadth-first closure of `w` under the defining relations.
///
/// `bound` overrides the per-strand default word-length bound.
pub fn equivalence_class(w: &PositiveBraidWord, bound: Option<usize>) -> Result<EquivalenceClass> {
    let limit = bound.unwrap_or_else(|| default_bound(w.strands()));
    if w.len() > limit {
        return Err(Error::BoundExceeded(format!(
            "word length {} exceeds the configured bound {} for {} strands",
            w.len(),
            limit,
            w.strands()
        )));
    }
    let mut seen: BTreeSet<Vec<u16>> = BTreeSet::new();
    let mut frontier: VecDeque<Vec<u16>> = VecDeque::new();
    seen.insert(w.letters().to_vec());
    frontier.push_back(w.letters().to_vec());
    let mut scratch = Vec::new();
    while let Some(current) = frontier.pop_front() {
        neighbours(&current, &mut scratch);
        for v in scratch.drain(..) {
            if !seen.contains(&v) {
                if seen.len() >= MAX_CLASS_SIZE {
                    return Err(Error::BoundExceeded(format!(
                        "equivalence class exceeds {MAX_CLASS_SIZE} words"
                    )));
                }
                seen.insert(v.clone());
                frontier.push_back(v);
            }
        }
    }
    Ok(EquivalenceClass {
        strands: w.strands(),
        words: seen,
    })
}

/// Divisibility by inspection: some class member ends with `σ_i`.
pub fn oracle_right_divides(
    w: &PositiveBraidWord,
    g: Generator,
    bound: Option<usize>,
) -> Result<bool> {
    let class = equivalence_class(w, bound)?;
    let i = g.index();
    Ok(class.words.iter().any(|ls| ls.last() == Some(&i)))
}

/// Equality by inspection: the classes intersect (equivalently, coincide).
pub fn oracle_equivalent(
    u: &PositiveBraidWord,
    v: &PositiveBraidWord,
    bound: Option<usize>,
) -> Result<bool> {
    if u.strands() != v.strands() {
        return Err(Error::StrandMismatch(u.strands(), v.strands()));
    }
    if u.len() != v.len() {
        return Ok(false);
    }
    let class = equivalence_class(u, bound)?;
    Ok(class.contains(v))
}

/// The unique class member whose word-level exponent tree is
/// ShortLex-minimal.
pub fn burckel_normal_of(w: &PositiveBraidWord, bound: Option<usize>) -> Result<PositiveBraidWord> {
    let class = equivalence_class(w, bound)?;
    let n = w.strands();
    let mut best: Option<(splitting::ExponentTree, PositiveBraidWord)> = None;
    let mut witnesses = 0usize;
    for member in class.iter() {
        let tree = splitting::word_exponents(&member, n)?;
        match &best {
            None => {
                best = Some((tree, member));
                witnesses = 1;
            }
            Some((t, _)) => match splitting::shortlex_compare(&tree, t) {
                std::cmp::Ordering::Less => {
                    best = Some((tree, member));
                    witnesses = 1;
                }
                std::cmp::Ordering::Equal => witnesses += 1,
                std::cmp::Ordering::Greater => {}
            },
        }
    }
    let (_, word) = best.expect("class is nonempty");
    if witnesses != 1 {
        return Err(Error::Invariant(format!(
            "{witnesses} class members share the minimal exponent tree"
        )));
    }
    Ok(word)
}

/// Every positive word over `strands` strands with length in `lengths`.
///
/// A test utility, but exported because the verify suite and the acceptance
/// tests both enumerate the same lattices.
pub fn all_words(strands: u16, lengths: std::ops::RangeInclusive<usize>) -> Vec<PositiveBraidWord> {
    let atoms: Vec<u16> = (1..strands).collect();
    let mut out = Vec::new();
    for len in lengths {
        let mut idx = vec![0usize; len];
        loop {
            out.push(PositiveBraidWord::from_raw(
                strands,
                idx.iter().map(|&j| atoms[j]).collect(),
            ));
            // odometer
            let mut pos = len;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < atoms.len() {
                    break;
                }
                idx[pos] = 0;
                if pos == 0 {
                    pos = usize::MAX;
                    break;
                }
            }
            if len == 0 || pos == usize::MAX {
                break;
            }
        }
    }
    out
}
