//! Splittings along the flip covering, for braids and for words.
//!
//! The `n`-splitting of a positive `n`-strand braid is the alternating
//! decomposition along `B_{n-1}^+` and its flipped copy, with the flips
//! normalised away so that every entry lives in `B_{n-1}^+`. Iterating down
//! to two strands gives the canonical decomposition tree, and forgetting
//! generator names gives the exponent tree that drives the ShortLex order.
//! The word-level analogues are purely syntactic suffix extractions in the
//! free monoid.

use std::cmp::Ordering;
use std::fmt;

use serde_json::{json, Value};

use crate::covering::IteratedSequence;
use crate::error::{Error, Result};
use crate::garside::{self, ParabolicIndexSet};
use crate::ordering;
use crate::word::{delta_small, PositiveBraidWord};

/// The `n`-splitting of a braid: entries `(x_p, ..., x_1)` over `n-1`
/// strands, stored leftmost first (`entries[0]` is `x_p`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Splitting {
    strands: u16,
    entries: Vec<PositiveBraidWord>,
}

impl Splitting {
    /// Ambient strand count `n` (entries live over `n-1` strands).
    pub fn strands(&self) -> u16 {
        self.strands
    }

    /// The number of entries, i.e. the `n`-breadth of the braid.
    pub fn breadth(&self) -> usize {
        self.entries.len()
    }

    /// Entries leftmost first: `entries()[0]` is `x_p`.
    pub fn entries(&self) -> &[PositiveBraidWord] {
        &self.entries
    }

    /// The entry `c_r`, counted from the right with `c_0` the rightmost.
    pub fn entry_from_right(&self, r: usize) -> Option<&PositiveBraidWord> {
        let p = self.entries.len();
        if r < p {
            Some(&self.entries[p - 1 - r])
        } else {
            None
        }
    }

    /// Re-evaluates the splitting: `Φ^{p-1}(x_p) ··· Φ(x_2) · x_1`.
    pub fn reconstruct(&self) -> Result<PositiveBraidWord> {
        let n = self.strands;
        let p = self.entries.len();
        let mut out = PositiveBraidWord::empty(n)?;
        for (j, entry) in self.entries.iter().enumerate() {
            let r = p - j; // index from the right
            let mut e = entry.with_strands(n)?;
            if (r - 1) % 2 == 1 {
                e = e.flip();
            }
            out = out.concat(&e)?;
        }
        Ok(out)
    }
}

impl fmt::Display for Splitting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join(" ; "))
    }
}

/// Computes the `n`-splitting of a braid by repeatedly taking the
/// `B_{n-1}^+`-tail and flipping the remainder.
///
/// The division engine is carried across entries (flipping it at each
/// boundary along with the remainder word), so long words split without
/// rebuilding it per entry.
pub fn braid_splitting(w: &PositiveBraidWord, n: u16) -> Result<Splitting> {
    if n < 3 {
        return Err(Error::Domain("splittings need n >= 3".into()));
    }
    if w.strands() != n {
        return Err(Error::StrandMismatch(w.strands(), n));
    }
    let inner = ParabolicIndexSet::range(1, n - 2);
    let mut entries: Vec<PositiveBraidWord> = Vec::new();
    let mut rest: Vec<u16> = w.letters().to_vec();
    let mut form = garside::GreedyForm::of_word(w);
    loop {
        let tail_letters = garside::extract_tail(&mut rest, &mut form, &inner);
        entries.push(PositiveBraidWord::from_indices(n - 1, tail_letters)?);
        if rest.is_empty() {
            break;
        }
        for letter in rest.iter_mut() {
            *letter = n - *letter;
        }
        form.flip();
    }
    entries.reverse();
    Ok(Splitting {
        strands: n,
        entries,
    })
}

/// The `n`-breadth of a braid.
pub fn breadth(w: &PositiveBraidWord, n: u16) -> Result<usize> {
    Ok(breadth_profile(w, n)?.len())
}

/// The entry lengths `(|x_p|, ..., |x_1|)` of the `n`-splitting, leftmost
/// first, computed on the division engine alone.
///
/// Entry lengths are invariants of the braid (the relations are
/// homogeneous), so no word bookkeeping is needed; this is what makes long
/// random-walk checkpoints affordable.
pub fn breadth_profile(w: &PositiveBraidWord, n: u16) -> Result<Vec<usize>> {
    if n < 3 {
        return Err(Error::Domain("splittings need n >= 3".into()));
    }
    if w.strands() != n {
        return Err(Error::StrandMismatch(w.strands(), n));
    }
    let mut form = garside::GreedyForm::of_word(w);
    let mut profile: Vec<usize> = Vec::new();
    loop {
        let mut count = 0usize;
        loop {
            let mut hit = None;
            for i in form.right_divisor_atoms() {
                if i <= n - 2 {
                    hit = Some(i);
                    break;
                }
            }
            match hit {
                Some(i) => {
                    form.right_div_atom(i)?;
                    count += 1;
                }
                None => break,
            }
        }
        profile.push(count);
        if form.is_trivial() {
            break;
        }
        form.flip();
    }
    profile.reverse();
    Ok(profile)
}

/// The full decomposition tree of a braid, iterating splittings down to two
/// strands. Leaf names carry the flips, so this equals the iterated
/// decomposition along the canonical covering.
pub fn braid_decomposition(w: &PositiveBraidWord) -> Result<IteratedSequence> {
    let n = w.strands();
    if n == 2 {
        return Ok(IteratedSequence::Leaf(w.clone()));
    }
    let split = braid_splitting(w, n)?;
    let p = split.breadth();
    let mut children = Vec::with_capacity(p);
    for (j, entry) in split.entries().iter().enumerate() {
        let r = p - j;
        let sub = braid_decomposition(entry)?;
        let sub = if (r - 1) % 2 == 1 {
            sub.map_letters(&|i| n - i, n)
        } else {
            sub.map_letters(&|i| i, n)
        };
        children.push(sub);
    }
    Ok(IteratedSequence::Node(children))
}

/// An iterated sequence of exponents: what is left of a decomposition tree
/// after forgetting generator names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExponentTree {
    Leaf(u32),
    Node(Vec<ExponentTree>),
}

impl ExponentTree {
    pub fn depth(&self) -> usize {
        match self {
            ExponentTree::Leaf(_) => 0,
            ExponentTree::Node(children) => {
                1 + children.iter().map(|c| c.depth()).max().unwrap_or(0)
            }
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            ExponentTree::Leaf(e) => json!(e),
            ExponentTree::Node(children) => {
                Value::Array(children.iter().map(|c| c.to_json()).collect())
            }
        }
    }

    /// Parses nested arrays of non-negative integers.
    pub fn from_json(v: &Value) -> Result<ExponentTree> {
        match v {
            Value::Number(x) => x
                .as_u64()
                .map(|e| ExponentTree::Leaf(e as u32))
                .ok_or_else(|| {
                    Error::ShapeMismatch("exponents must be non-negative integers".into())
                }),
            Value::Array(children) => {
                if children.is_empty() {
                    return Err(Error::ShapeMismatch(
                        "empty sequence in exponent tree".into(),
                    ));
                }
                Ok(ExponentTree::Node(
                    children
                        .iter()
                        .map(ExponentTree::from_json)
                        .collect::<Result<_>>()?,
                ))
            }
            _ => Err(Error::ShapeMismatch(
                "exponent tree must be nested arrays of integers".into(),
            )),
        }
    }
}

impl fmt::Display for ExponentTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExponentTree::Leaf(e) => write!(f, "{e}"),
            ExponentTree::Node(children) => {
                write!(f, "(")?;
                for (k, c) in children.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Strips generator names from a decomposition tree.
pub fn exponent_sequence(tree: &IteratedSequence) -> ExponentTree {
    match tree {
        IteratedSequence::Leaf(w) => ExponentTree::Leaf(w.len() as u32),
        IteratedSequence::Node(children) => {
            ExponentTree::Node(children.iter().map(exponent_sequence).collect())
        }
    }
}

/// ShortLex on iterated exponent sequences: compare integers at depth 0;
/// otherwise compare lengths, then entries lexicographically from the left
/// (index `p` downward).
pub fn shortlex_compare(s: &ExponentTree, t: &ExponentTree) -> Ordering {
    match (s, t) {
        (ExponentTree::Leaf(a), ExponentTree::Leaf(b)) => a.cmp(b),
        (ExponentTree::Node(a), ExponentTree::Node(b)) => match a.len().cmp(&b.len()) {
            Ordering::Equal => {
                for (x, y) in a.iter().zip(b.iter()) {
                    match shortlex_compare(x, y) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            other => other,
        },
        _ => panic!("shortlex on trees of unequal depth"),
    }
}

/// The syntactic `n`-splitting of a word: repeatedly strip the longest
/// suffix avoiding `σ_{n-1}`, flip the prefix, recurse. Entries leftmost
/// first, over `n-1` strands; only the rightmost entry may be empty.
pub fn word_splitting(w: &PositiveBraidWord, n: u16) -> Result<Vec<PositiveBraidWord>> {
    if n < 3 {
        return Err(Error::Domain("splittings need n >= 3".into()));
    }
    if w.strands() != n {
        return Err(Error::StrandMismatch(w.strands(), n));
    }
    let top = n - 1;
    let mut entries: Vec<PositiveBraidWord> = Vec::new();
    let mut current: Vec<u16> = w.letters().to_vec();
    loop {
        let cut = current
            .iter()
            .rposition(|&i| i == top)
            .map(|pos| pos + 1)
            .unwrap_or(0);
        let suffix: Vec<u16> = current[cut..].to_vec();
        entries.push(PositiveBraidWord::from_raw(n - 1, suffix));
        if cut == 0 {
            break;
        }
        current.truncate(cut);
        for letter in current.iter_mut() {
            *letter = n - *letter;
        }
    }
    entries.reverse();
    Ok(entries)
}

/// The literal bracketing of a word along the canonical covering; leaves
/// are the maximal single-generator runs, with flips applied so the leaves
/// read as subwords of `w`.
pub fn word_decomposition(w: &PositiveBraidWord, n: u16) -> Result<IteratedSequence> {
    if n == 2 {
        return Ok(IteratedSequence::Leaf(w.clone()));
    }
    let entries = word_splitting(w, n)?;
    let p = entries.len();
    let mut children = Vec::with_capacity(p);
    for (j, entry) in entries.iter().enumerate() {
        let r = p - j;
        let sub = word_decomposition(entry, n - 1)?;
        let sub = if (r - 1) % 2 == 1 {
            sub.map_letters(&|i| n - i, n)
        } else {
            sub.map_letters(&|i| i, n)
        };
        children.push(sub);
    }
    Ok(IteratedSequence::Node(children))
}

/// The word-level exponent tree.
pub fn word_exponents(w: &PositiveBraidWord, n: u16) -> Result<ExponentTree> {
    Ok(exponent_sequence(&word_decomposition(w, n)?))
}

/// Which splitting constraint a candidate sequence violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplittingConstraint {
    /// The leftmost entry of a sequence of breadth >= 2 is trivial.
    TopEntryTrivial,
    /// An interior entry (position `r` from the right, `p > r >= 3`) is below
    /// `δ_{n-1} σ_1`.
    InteriorEntry { r: usize },
    /// The second entry is below `δ_{n-1}` although the breadth is >= 3.
    SecondEntry,
}

impl fmt::Display for SplittingConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SplittingConstraint::TopEntryTrivial => write!(f, "leftmost entry is trivial"),
            SplittingConstraint::InteriorEntry { r } => {
                write!(
                    f,
                    "entry {r} (from the right) is below the descending-run floor"
                )
            }
            SplittingConstraint::SecondEntry => {
                write!(f, "second entry is below the descending run")
            }
        }
    }
}

/// Verdict of [`validate_splitting`].
///
/// For `n = 3` the constraints are exact, so the positive verdict is
/// `Valid`. For `n >= 4` they are necessary only — whether they are also
/// sufficient is open — so the positive verdict never claims more than
/// `PassesNecessary`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplittingVerdict {
    Valid,
    PassesNecessary,
    Invalid(SplittingConstraint),
}

impl fmt::Display for SplittingVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SplittingVerdict::Valid => write!(f, "valid"),
            SplittingVerdict::PassesNecessary => write!(f, "passes-necessary"),
            SplittingVerdict::Invalid(c) => write!(f, "invalid: {c}"),
        }
    }
}

/// Checks whether `(x_p, ..., x_1)` (entries over `n-1` strands, leftmost
/// first) can be the `n`-splitting of a braid.
pub fn validate_splitting(entries: &[PositiveBraidWord], n: u16) -> Result<SplittingVerdict> {
    if n < 3 {
        return Err(Error::Domain("splittings need n >= 3".into()));
    }
    if entries.is_empty() {
        return Err(Error::Domain("a splitting has at least one entry".into()));
    }
    for e in entries {
        if e.strands() != n - 1 {
            return Err(Error::StrandMismatch(e.strands(), n - 1));
        }
    }
    let p = entries.len();
    let exact = n == 3;
    let pass = if exact {
        SplittingVerdict::Valid
    } else {
        SplittingVerdict::PassesNecessary
    };
    if p == 1 {
        // (x_1) is the n-splitting of x_1 itself.
        return Ok(SplittingVerdict::Valid);
    }
    if entries[0].is_empty() {
        return Ok(SplittingVerdict::Invalid(
            SplittingConstraint::TopEntryTrivial,
        ));
    }
    let floor_run = delta_small(n - 1)?;
    let floor_interior = floor_run.concat(&PositiveBraidWord::from_indices(n - 1, [1])?)?;
    for (j, entry) in entries.iter().enumerate() {
        let r = p - j;
        if r == p || r <= 2 {
            continue;
        }
        if ordering::compare_plus(entry, &floor_interior)? == Ordering::Less {
            return Ok(SplittingVerdict::Invalid(
                SplittingConstraint::InteriorEntry { r },
            ));
        }
    }
    if p >= 3 {
        let second = &entries[p - 2];
        if ordering::compare_plus(second, &floor_run)? == Ordering::Less {
            return Ok(SplittingVerdict::Invalid(SplittingConstraint::SecondEntry));
        }
    }
    Ok(pass)
}
