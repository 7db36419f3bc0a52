//! The divisibility engine for positive braid monoids.
//!
//! Two mechanisms live here and they deliberately overlap:
//!
//! * the *right greedy normal form* over permutation simple factors, which is
//!   the canonical value used for equality testing and for reading off the set
//!   of atoms dividing a braid on the right (the descent set of the final
//!   factor);
//! * *right subword reversing*, which divides a concrete word by an atom and
//!   produces a concrete quotient word. Reversing is what the letterwise
//!   normal-form traces print, so its output words are part of the contract.
//!
//! Divisibility verdicts from the two mechanisms agree; the oracle module
//! checks this exhaustively at small sizes.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::word::{Generator, PositiveBraidWord};

/// A permutation of `{0..n-1}` in one-line notation: `map[k]` is the image of
/// position `k`. Words compose left to right: `σ_{i1} σ_{i2}` maps `k` to
/// `t_{i2}(t_{i1}(k))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Perm {
    map: Vec<u16>,
}

impl Perm {
    pub fn identity(n: u16) -> Perm {
        Perm {
            map: (0..n).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(k, &v)| k as u16 == v)
    }

    pub fn atom(i: u16, n: u16) -> Perm {
        let mut p = Perm::identity(n);
        p.map.swap(i as usize - 1, i as usize);
        p
    }

    pub fn degree(&self) -> u16 {
        self.map.len() as u16
    }

    /// `self` applied first, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm {
            map: self.map.iter().map(|&v| other.map[v as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut map = vec![0u16; self.map.len()];
        for (k, &v) in self.map.iter().enumerate() {
            map[v as usize] = k as u16;
        }
        Perm { map }
    }

    /// `σ_i` is a left divisor of the simple braid of `self` iff `i-1` is a
    /// descent of the one-line notation.
    pub fn has_left_descent(&self, i: u16) -> bool {
        self.map[i as usize - 1] > self.map[i as usize]
    }

    /// `σ_i` is a right divisor iff the value `i-1` sits right of the value `i`.
    pub fn has_right_descent(&self, i: u16) -> bool {
        let inv = self.position_of(i - 1);
        let inv2 = self.position_of(i);
        inv > inv2
    }

    fn position_of(&self, value: u16) -> usize {
        self.map
            .iter()
            .position(|&v| v == value)
            .expect("value in range")
    }

    /// Multiplies by `σ_i` on the left (swaps the entries at positions i-1, i).
    pub fn left_mul_atom(&mut self, i: u16) {
        self.map.swap(i as usize - 1, i as usize);
    }

    /// Multiplies by `σ_i` on the right (swaps the values i-1 and i).
    pub fn right_mul_atom(&mut self, i: u16) {
        let a = self.position_of(i - 1);
        let b = self.position_of(i);
        self.map.swap(a, b);
    }

    /// All `i` with `σ_i` a right divisor of the simple braid of `self`.
    pub fn right_descents(&self) -> Vec<u16> {
        let inv = self.inverse();
        (1..self.degree())
            .filter(|&i| inv.map[i as usize - 1] > inv.map[i as usize])
            .collect()
    }

    /// The reversal permutation, i.e. the Garside element `Δ_n`.
    pub fn reversal(n: u16) -> Perm {
        Perm {
            map: (0..n).rev().collect(),
        }
    }

    /// Image under the flip automorphism: conjugation by the reversal.
    pub fn flip(&self) -> Perm {
        let n = self.map.len();
        Perm {
            map: (0..n)
                .map(|k| (n - 1) as u16 - self.map[n - 1 - k])
                .collect(),
        }
    }

    /// A reduced word for the permutation, extracting the smallest left
    /// descent first; deterministic.
    pub fn reduced_word(&self) -> Vec<u16> {
        let mut out = Vec::new();
        let mut p = self.clone();
        loop {
            let mut found = None;
            for i in 1..p.degree() {
                if p.has_left_descent(i) {
                    found = Some(i);
                    break;
                }
            }
            match found {
                Some(i) => {
                    out.push(i);
                    p.left_mul_atom(i); // strips σ_i off the left
                }
                None => break,
            }
        }
        out
    }
}

/// A simple element of `B_n^+`: a divisor of `Δ_n`, encoded by a permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleFactor {
    pub(crate) perm: Perm,
}

impl SimpleFactor {
    pub fn strands(&self) -> u16 {
        self.perm.degree()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity()
    }

    /// The atoms `σ_i` right-dividing this simple element.
    pub fn right_divisor_atoms(&self) -> Vec<u16> {
        self.perm.right_descents()
    }

    /// The atoms `σ_i` left-dividing this simple element.
    pub fn left_divisor_atoms(&self) -> Vec<u16> {
        (1..self.perm.degree())
            .filter(|&i| self.perm.has_left_descent(i))
            .collect()
    }

    /// A reduced word representing this simple element.
    pub fn word(&self, strands: u16) -> PositiveBraidWord {
        PositiveBraidWord::from_raw(strands, self.perm.reduced_word())
    }
}

/// Right greedy normal form: factors are non-identity simple elements, each
/// the maximal simple right divisor of what is left of it.
///
/// Internally factors are stored rightmost-first, so `factors_internal[0]` is
/// the final factor whose descent set answers atom divisibility queries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyForm {
    strands: u16,
    factors: Vec<Perm>,
}

impl GreedyForm {
    /// Computes the normal form of a word by left-multiplying letters one at
    /// a time, right to left.
    pub fn of_word(w: &PositiveBraidWord) -> GreedyForm {
        GreedyForm::of_letters(w.strands(), w.letters())
    }

    pub(crate) fn of_letters(strands: u16, letters: &[u16]) -> GreedyForm {
        let mut form = GreedyForm {
            strands,
            factors: Vec::new(),
        };
        for &i in letters.iter().rev() {
            form.left_mul_atom(i);
        }
        form
    }

    pub fn strands(&self) -> u16 {
        self.strands
    }

    /// Number of simple factors (the canonical length).
    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// Factors left to right, as in the usual display of the normal form.
    pub fn factors(&self) -> Vec<SimpleFactor> {
        self.factors
            .iter()
            .rev()
            .map(|p| SimpleFactor { perm: p.clone() })
            .collect()
    }

    /// The atoms `σ_i` right-dividing the represented braid.
    pub fn right_divisor_atoms(&self) -> Vec<u16> {
        match self.factors.first() {
            Some(f) => f.right_descents(),
            None => Vec::new(),
        }
    }

    pub fn divisible_by(&self, i: u16) -> bool {
        match self.factors.first() {
            Some(f) => f.has_right_descent(i),
            None => false,
        }
    }

    /// Multiplies by `σ_i` on the left and restores normality.
    pub fn left_mul_atom(&mut self, i: u16) {
        self.factors.push(Perm::atom(i, self.strands));
        let top = self.factors.len() - 1;
        self.renormalize(top);
    }

    /// Multiplies by `σ_i` on the right and restores normality.
    pub fn right_mul_atom(&mut self, i: u16) {
        self.factors.insert(0, Perm::atom(i, self.strands));
        self.renormalize(1);
    }

    /// Divides by `σ_i` on the right; the caller must have checked
    /// divisibility.
    pub fn right_div_atom(&mut self, i: u16) -> Result<()> {
        if !self.divisible_by(i) {
            return Err(Error::NotARightDivisor(i));
        }
        self.factors[0].right_mul_atom(i); // strips σ_i: f σ_i^{-1}
        if self.factors[0].is_identity() {
            self.factors.remove(0);
        }
        self.renormalize(1);
        Ok(())
    }

    /// Restores right-normality by local sliding, starting from the pair
    /// `(factors[seed], factors[seed-1])` and rechecking neighbours of every
    /// pair that moved. Each successful slide strictly shifts letters toward
    /// the right end, so the worklist terminates.
    fn renormalize(&mut self, seed: usize) {
        let mut queue: BTreeSet<usize> = BTreeSet::new();
        if seed >= 1 {
            queue.insert(seed);
        }
        while let Some(&idx) = queue.iter().next() {
            queue.remove(&idx);
            if idx == 0 || idx >= self.factors.len() {
                continue;
            }
            if !self.fix_pair(idx) {
                continue;
            }
            if self.factors[idx].is_identity() {
                self.factors.remove(idx);
                queue = queue
                    .into_iter()
                    .map(|j| if j > idx { j - 1 } else { j })
                    .collect();
                queue.insert(idx); // the pair bridging the removal
            } else {
                queue.insert(idx + 1); // left neighbour may slide into the shrunk factor
            }
            if idx > 1 {
                queue.insert(idx - 1); // the grown factor may shed rightward
            }
        }
    }

    /// Moves the maximal slice from `factors[idx]` (left) into
    /// `factors[idx-1]` (right). Returns true when something moved.
    fn fix_pair(&mut self, idx: usize) -> bool {
        let n = self.strands;
        let right_complement = {
            // u with u · f = Δ, i.e. u = Δ f^{-1}.
            let f_inv = self.factors[idx - 1].inverse();
            Perm::reversal(n).then(&f_inv)
        };
        let t = gcd_right(&self.factors[idx], &right_complement);
        if t.is_identity() {
            return false;
        }
        // factors[idx] loses t on the right, factors[idx-1] gains it on the left.
        let t_inv = t.inverse();
        self.factors[idx] = self.factors[idx].then(&t_inv);
        self.factors[idx - 1] = t.then(&self.factors[idx - 1]);
        true
    }

    /// A canonical word for the represented braid: the concatenation of the
    /// reduced words of the factors, leftmost factor first.
    pub fn canonical_word(&self) -> PositiveBraidWord {
        let mut letters = Vec::new();
        for f in self.factors.iter().rev() {
            letters.extend(f.reduced_word());
        }
        PositiveBraidWord::from_raw(self.strands, letters)
    }

    /// Applies the flip automorphism in place. The flip maps simple factors
    /// to simple factors and preserves normality, so the factor list is
    /// simply flipped factor by factor.
    pub fn flip(&mut self) {
        for f in self.factors.iter_mut() {
            *f = f.flip();
        }
    }
}

impl fmt::Display for GreedyForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in self.factors.iter().rev() {
            if !first {
                write!(f, " . ")?;
            }
            let w = PositiveBraidWord::from_raw(self.strands, p.reduced_word());
            write!(f, "({w})")?;
            first = false;
        }
        Ok(())
    }
}

/// Greatest common right divisor of two simple elements, by repeatedly
/// extracting a shared right-dividing atom.
fn gcd_right(a: &Perm, b: &Perm) -> Perm {
    let n = a.degree();
    let mut a = a.clone();
    let mut b = b.clone();
    let mut letters: Vec<u16> = Vec::new();
    'outer: loop {
        let a_inv = a.inverse();
        let b_inv = b.inverse();
        for i in 1..n {
            let da = a_inv.map[i as usize - 1] > a_inv.map[i as usize];
            if !da {
                continue;
            }
            let db = b_inv.map[i as usize - 1] > b_inv.map[i as usize];
            if db {
                a.right_mul_atom(i);
                b.right_mul_atom(i);
                letters.push(i);
                continue 'outer;
            }
        }
        break;
    }
    // Rebuild the gcd from the extraction sequence: extracted rightmost-first.
    let mut g = Perm::identity(n);
    for &i in letters.iter().rev() {
        g = g.then(&Perm::atom(i, n));
    }
    g
}

/// Computes the right greedy normal form of a word.
pub fn greedy(w: &PositiveBraidWord) -> GreedyForm {
    GreedyForm::of_word(w)
}

/// Whether the braid of `w` is a left multiple of `σ_i`.
pub fn right_divides(w: &PositiveBraidWord, g: Generator) -> bool {
    greedy(w).divisible_by(g.index())
}

/// Right division of a word by an atom, by right subword reversing.
///
/// The quotient word this produces is the one the letterwise normal-form
/// algorithm prints in its trace; changing it changes observable output.
/// Returns `NotARightDivisor` when `σ_s` does not divide the braid of `w`.
pub fn quotient(w: &PositiveBraidWord, g: Generator) -> Result<PositiveBraidWord> {
    let letters =
        reversing_quotient(w.letters(), g.index()).ok_or(Error::NotARightDivisor(g.index()))?;
    Ok(PositiveBraidWord::from_raw(w.strands(), letters))
}

/// Core of the reversing division: pushes `σ_s^{-1}` leftward through `w`.
///
/// Rules, looking at the final letter `a` of `w`:
/// cancel it when `a = s`; move past it when `|a-s| >= 2`; and when
/// `|a-s| = 1` rewrite `a s^{-1} = s^{-1} a^{-1} s a`, which costs a division
/// by `s` and then by `a` before re-appending `s a`.
pub(crate) fn reversing_quotient(w: &[u16], s: u16) -> Option<Vec<u16>> {
    let (&a, rest) = w.split_last()?;
    if a == s {
        return Some(rest.to_vec());
    }
    let d = a.abs_diff(s);
    if d >= 2 {
        let mut v = reversing_quotient(rest, s)?;
        v.push(a);
        Some(v)
    } else {
        let v = reversing_quotient(rest, s)?;
        let mut v = reversing_quotient(&v, a)?;
        v.push(s);
        v.push(a);
        Some(v)
    }
}

/// A positive word `c` with `σ_i · c ≡ Δ_n`, obtained through the reversal
/// anti-automorphism (which fixes `Δ_n`).
pub fn left_quotient_delta(g: Generator, n: u16) -> Result<PositiveBraidWord> {
    let d = crate::word::delta(n)?;
    let q = quotient(&d.rev(), g)?;
    Ok(q.rev())
}

/// A set of generator indices, naming a standard parabolic submonoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicIndexSet {
    indices: BTreeSet<u16>,
}

impl ParabolicIndexSet {
    pub fn new(indices: impl IntoIterator<Item = u16>) -> ParabolicIndexSet {
        ParabolicIndexSet {
            indices: indices.into_iter().collect(),
        }
    }

    /// `{lo..=hi}`; empty when `lo > hi`.
    pub fn range(lo: u16, hi: u16) -> ParabolicIndexSet {
        ParabolicIndexSet {
            indices: (lo..=hi).collect(),
        }
    }

    pub fn contains(&self, i: u16) -> bool {
        self.indices.contains(&i)
    }

    pub fn iter(&self) -> impl Iterator<Item = u16> + '_ {
        self.indices.iter().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn union(&self, other: &ParabolicIndexSet) -> ParabolicIndexSet {
        ParabolicIndexSet {
            indices: self.indices.union(&other.indices).copied().collect(),
        }
    }
}

impl fmt::Display for ParabolicIndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.indices.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// The maximal right divisor of `w` lying in the parabolic submonoid on `I`,
/// together with the quotient: `rest · tail ≡ w` and no `σ_i` with `i ∈ I`
/// right-divides `rest`.
///
/// Word-level extraction order: strip the literal final letter when it lies
/// in `I`, otherwise divide by the smallest divisible atom of `I` via
/// reversing. Any order yields the same tail braid; this order pins the
/// output words.
pub fn tail(
    w: &PositiveBraidWord,
    set: &ParabolicIndexSet,
) -> (PositiveBraidWord, PositiveBraidWord) {
    let n = w.strands();
    let mut rest: Vec<u16> = w.letters().to_vec();
    let mut form = GreedyForm::of_word(w);
    let tail_letters = extract_tail(&mut rest, &mut form, set);
    (
        PositiveBraidWord::from_raw(n, tail_letters),
        PositiveBraidWord::from_raw(n, rest),
    )
}

/// Extraction loop shared by [`tail`] and the splitting routines: strips the
/// literal final letter when it lies in the set, otherwise divides by the
/// smallest dividing atom of the set via reversing. Both `rest` and `form`
/// are updated in step; the extracted letters are returned leftmost-first.
pub(crate) fn extract_tail(
    rest: &mut Vec<u16>,
    form: &mut GreedyForm,
    set: &ParabolicIndexSet,
) -> Vec<u16> {
    let mut tail_rev: Vec<u16> = Vec::new(); // letters rightmost-first
    loop {
        if let Some(&last) = rest.last() {
            if set.contains(last) {
                rest.pop();
                form.right_div_atom(last).expect("final letter divides");
                tail_rev.push(last);
                continue;
            }
        }
        let mut extracted = false;
        for i in form.right_divisor_atoms() {
            if set.contains(i) {
                *rest = reversing_quotient(rest, i).expect("divisor confirmed by normal form");
                form.right_div_atom(i)
                    .expect("divisor confirmed by normal form");
                tail_rev.push(i);
                extracted = true;
                break;
            }
        }
        if !extracted {
            break;
        }
    }
    tail_rev.reverse();
    tail_rev
}

/// Whether two words represent the same braid, via canonical form equality.
pub fn equivalent(u: &PositiveBraidWord, v: &PositiveBraidWord) -> bool {
    assert_eq!(
        u.strands(),
        v.strands(),
        "equivalence needs a common strand count"
    );
    if u.len() != v.len() {
        return false; // homogeneous relations preserve length
    }
    greedy(u) == greedy(v)
}
