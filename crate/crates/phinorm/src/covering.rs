//! Covering skeletons, addresses, and the decompositions they induce.
//!
//! A depth-`k` atomic covering of `B_n^+` assigns one generator to each
//! binary `k`-address; nested prefixes name nested parabolic submonoids.
//! Decomposing an element means repeatedly extracting the maximal right
//! divisor lying in the submonoid named by the current address, then moving
//! to the right successor address that still has something to offer. The
//! letterwise variant extracts one letter at a time and yields a normal form
//! whenever the covering is dense (no gaps can appear).

use std::fmt;
use std::sync::OnceLock;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::garside::{self, GreedyForm, ParabolicIndexSet};
use crate::splitting::ExponentTree;
use crate::word::PositiveBraidWord;

/// A fixed-length string of digits over `{1, 2}` locating a node of the
/// covering skeleton.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryAddress {
    digits: Vec<u8>,
}

impl BinaryAddress {
    /// The base address `1^len`.
    pub fn ones(len: usize) -> BinaryAddress {
        BinaryAddress {
            digits: vec![1; len],
        }
    }

    pub fn new(digits: Vec<u8>) -> Result<BinaryAddress> {
        if digits.iter().any(|&d| d != 1 && d != 2) {
            return Err(Error::Domain("binary address digits must be 1 or 2".into()));
        }
        Ok(BinaryAddress { digits })
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    /// The binary `m`-successor: keep `m` digits, flip the next one, pad
    /// with 1s (incrementing reduces mod 2 into `{1, 2}`).
    pub fn successor(&self, m: usize) -> Result<BinaryAddress> {
        if m > self.len() {
            return Err(Error::SuccessorOutOfRange {
                index: m,
                len: self.len(),
            });
        }
        let mut digits = self.digits.clone();
        if m < self.len() {
            digits[m] = if digits[m] == 1 { 2 } else { 1 };
            for d in digits.iter_mut().skip(m + 1) {
                *d = 1;
            }
        }
        Ok(BinaryAddress { digits })
    }
}

impl fmt::Display for BinaryAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// A fixed-length string of positive digits; the digit at position `j`
/// counts how far the decomposition has travelled at level `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneralAddress {
    digits: Vec<u32>,
}

impl GeneralAddress {
    pub fn ones(len: usize) -> GeneralAddress {
        GeneralAddress {
            digits: vec![1; len],
        }
    }

    pub fn new(digits: Vec<u32>) -> Result<GeneralAddress> {
        if digits.contains(&0) {
            return Err(Error::Domain("address digits must be positive".into()));
        }
        Ok(GeneralAddress { digits })
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    /// The `m`-successor: keep `m` digits, add one to the next, reset the
    /// rest to 1. With `m = len` the address is unchanged.
    pub fn successor(&self, m: usize) -> Result<GeneralAddress> {
        if m > self.len() {
            return Err(Error::SuccessorOutOfRange {
                index: m,
                len: self.len(),
            });
        }
        let mut digits = self.digits.clone();
        if m < self.len() {
            digits[m] += 1;
            for d in digits.iter_mut().skip(m + 1) {
                *d = 1;
            }
        }
        Ok(GeneralAddress { digits })
    }

    /// Digit-wise parity reduction into a binary address: odd digits become
    /// 1, even digits become 2.
    pub fn reduce(&self) -> BinaryAddress {
        BinaryAddress {
            digits: self
                .digits
                .iter()
                .map(|&d| if d.is_multiple_of(2) { 2 } else { 1 })
                .collect(),
        }
    }
}

impl fmt::Display for GeneralAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.digits.iter().all(|&d| d <= 9) {
            for d in &self.digits {
                write!(f, "{d}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.digits.iter().map(|d| d.to_string()).collect();
            write!(f, "{}", parts.join("."))
        }
    }
}

/// The `m`-successor of a general address.
pub fn successor(theta: &GeneralAddress, m: usize) -> Result<GeneralAddress> {
    theta.successor(m)
}

/// The binary `m`-successor of a binary address.
pub fn binary_successor(alpha: &BinaryAddress, m: usize) -> Result<BinaryAddress> {
    alpha.successor(m)
}

/// An atomic covering skeleton: a complete binary tree of depth `depth`
/// whose leaves carry generators of `B_n^+`.
#[derive(Debug)]
pub struct CoveringTree {
    strands: u16,
    depth: usize,
    /// Leaf atoms indexed by address bits (digit 1 -> 0, digit 2 -> 1, most
    /// significant digit first). Index 0 is the address `1^depth`.
    leaves: Vec<u16>,
    dense: OnceLock<bool>,
}

impl Clone for CoveringTree {
    fn clone(&self) -> Self {
        CoveringTree {
            strands: self.strands,
            depth: self.depth,
            leaves: self.leaves.clone(),
            dense: OnceLock::new(),
        }
    }
}

impl CoveringTree {
    /// Validates leaf count, letter bounds and that every atom occurs, so
    /// the skeleton really covers the monoid.
    pub fn new(strands: u16, depth: usize, leaves: Vec<u16>) -> Result<CoveringTree> {
        if strands < 2 {
            return Err(Error::InvalidStrands(strands as u64));
        }
        if depth >= 32 {
            return Err(Error::NotACovering("depth too large".into()));
        }
        if leaves.len() != 1usize << depth {
            return Err(Error::NotACovering(format!(
                "expected {} leaves at depth {depth}, found {}",
                1usize << depth,
                leaves.len()
            )));
        }
        for &g in &leaves {
            if g == 0 || g >= strands {
                return Err(Error::IndexOutOfRange {
                    index: g as i64,
                    strands,
                });
            }
        }
        for atom in 1..strands {
            if !leaves.contains(&atom) {
                return Err(Error::NotACovering(format!(
                    "generator {atom} does not occur among the leaves"
                )));
            }
        }
        Ok(CoveringTree {
            strands,
            depth,
            leaves,
            dense: OnceLock::new(),
        })
    }

    pub fn strands(&self) -> u16 {
        self.strands
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    fn index_of(&self, alpha: &BinaryAddress) -> usize {
        let mut idx = 0usize;
        for &d in alpha.digits() {
            idx = (idx << 1) | (d as usize - 1);
        }
        idx
    }

    /// The generator at a leaf address.
    pub fn leaf(&self, alpha: &BinaryAddress) -> Result<u16> {
        if alpha.len() != self.depth {
            return Err(Error::ShapeMismatch(format!(
                "address length {} vs depth {}",
                alpha.len(),
                self.depth
            )));
        }
        Ok(self.leaves[self.index_of(alpha)])
    }

    /// The letters occurring below a binary prefix.
    pub fn letters_under(&self, prefix: &[u8]) -> ParabolicIndexSet {
        let mut base = 0usize;
        for &d in prefix {
            base = (base << 1) | (d as usize - 1);
        }
        let width = self.depth - prefix.len();
        let lo = base << width;
        let hi = lo + (1usize << width);
        ParabolicIndexSet::new(self.leaves[lo..hi].iter().copied())
    }

    /// Density in the sense that no gaps can appear in decompositions: every
    /// inner submonoid is generated by one child together with the nearest
    /// leaf on the other side.
    pub fn is_dense(&self) -> bool {
        *self.dense.get_or_init(|| {
            for m in 0..self.depth {
                for b in 0..(1usize << m) {
                    let prefix: Vec<u8> = (0..m)
                        .map(|j| (((b >> (m - 1 - j)) & 1) as u8) + 1)
                        .collect();
                    let here = self.letters_under(&prefix);

                    let mut p1 = prefix.clone();
                    p1.push(1);
                    let mut first = self.letters_under(&p1);
                    let mut leaf21 = prefix.clone();
                    leaf21.push(2);
                    leaf21.extend(std::iter::repeat_n(1, self.depth - m - 1));
                    first = first.union(&ParabolicIndexSet::new([
                        self.leaves[self.index_of(&BinaryAddress { digits: leaf21 })]
                    ]));
                    if first != here {
                        return false;
                    }

                    let mut p2 = prefix.clone();
                    p2.push(2);
                    let mut second = self.letters_under(&p2);
                    let mut leaf1 = prefix.clone();
                    leaf1.extend(std::iter::repeat_n(1, self.depth - m));
                    second = second.union(&ParabolicIndexSet::new([
                        self.leaves[self.index_of(&BinaryAddress { digits: leaf1 })]
                    ]));
                    if second != here {
                        return false;
                    }
                }
            }
            true
        })
    }

    /// Parses the nested 2-array JSON form, e.g. `[[2,3],[2,1]]`.
    pub fn from_json(strands: u16, v: &Value) -> Result<CoveringTree> {
        fn walk(
            v: &Value,
            leaves: &mut Vec<u16>,
            depth: &mut Option<usize>,
            level: usize,
        ) -> Result<()> {
            match v {
                Value::Number(n) => {
                    let g = n.as_u64().ok_or_else(|| {
                        Error::NotACovering("leaf must be a positive integer".into())
                    })?;
                    match depth {
                        Some(d) if *d != level => {
                            return Err(Error::NotACovering("ragged covering tree".into()))
                        }
                        None => *depth = Some(level),
                        _ => {}
                    }
                    leaves.push(g as u16);
                    Ok(())
                }
                Value::Array(children) => {
                    if children.len() != 2 {
                        return Err(Error::NotACovering(
                            "inner nodes must have exactly 2 children".into(),
                        ));
                    }
                    // JSON lists the left (2-side) child first, matching the
                    // written order of a pair.
                    walk(&children[1], leaves, depth, level + 1)?;
                    walk(&children[0], leaves, depth, level + 1)
                }
                _ => Err(Error::NotACovering(
                    "covering JSON must be nested arrays of integers".into(),
                )),
            }
        }
        let mut leaves = Vec::new();
        let mut depth = None;
        walk(v, &mut leaves, &mut depth, 0)?;
        let depth = depth.unwrap_or(0);
        // The walk produced leaves in ascending address order within each
        // pair already (right child first), so the vector is index-ordered.
        CoveringTree::new(strands, depth, leaves)
    }

    /// The inverse of [`CoveringTree::from_json`].
    pub fn to_json(&self) -> Value {
        fn build(leaves: &[u16]) -> Value {
            if leaves.len() == 1 {
                return json!(leaves[0]);
            }
            let half = leaves.len() / 2;
            let (right, left) = leaves.split_at(half);
            json!([build(left), build(right)])
        }
        build(&self.leaves)
    }
}

/// The canonical covering of `B_n^+` by two flipped copies of `B_{n-1}^+`,
/// iterated down to single atoms.
pub fn base_sequence(n: u16) -> Result<CoveringTree> {
    if n < 2 {
        return Err(Error::InvalidStrands(n as u64));
    }
    let mut leaves: Vec<u16> = vec![1];
    for m in 3..=n {
        let flipped: Vec<u16> = leaves.iter().map(|&i| m - i).collect();
        let mut next = leaves.clone();
        next.extend(flipped);
        leaves = next;
    }
    CoveringTree::new(n, n as usize - 2, leaves)
}

/// Closed form for the leaf generator of the canonical covering: the
/// alternating sum over positions of even digits.
pub fn address_to_generator(alpha: &BinaryAddress, n: u16) -> Result<u16> {
    if n < 2 || alpha.len() != n as usize - 2 {
        return Err(Error::ShapeMismatch(format!(
            "address length {} does not fit {} strands",
            alpha.len(),
            n
        )));
    }
    let positions: Vec<i64> = alpha
        .digits()
        .iter()
        .enumerate()
        .filter(|(_, &d)| d == 2)
        .map(|(j, _)| j as i64 + 1)
        .collect();
    let mut sum = 0i64;
    for (k, &m) in positions.iter().enumerate() {
        sum += if k % 2 == 0 { -m } else { m };
    }
    sum += if positions.len().is_multiple_of(2) {
        1
    } else {
        n as i64
    };
    Ok(sum as u16)
}

/// A tree-shaped decomposition value: leaves are braid words, inner nodes
/// are sequences indexed `p..1` right to left (children are stored left to
/// right, so `children[0]` carries index `p`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IteratedSequence {
    Leaf(PositiveBraidWord),
    Node(Vec<IteratedSequence>),
}

impl IteratedSequence {
    /// Uniform depth of the tree (leaves at depth 0).
    pub fn depth(&self) -> usize {
        match self {
            IteratedSequence::Leaf(_) => 0,
            IteratedSequence::Node(children) => {
                1 + children.iter().map(|c| c.depth()).max().unwrap_or(0)
            }
        }
    }

    /// The leaves, leftmost first.
    pub fn leaves(&self) -> Vec<&PositiveBraidWord> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a PositiveBraidWord>) {
        match self {
            IteratedSequence::Leaf(w) => out.push(w),
            IteratedSequence::Node(children) => {
                for c in children {
                    c.collect_leaves(out);
                }
            }
        }
    }

    /// Concatenation of all leaves, leftmost first.
    pub fn unbracket(&self, strands: u16) -> PositiveBraidWord {
        let mut letters = Vec::new();
        for leaf in self.leaves() {
            letters.extend_from_slice(leaf.letters());
        }
        PositiveBraidWord::from_raw(strands, letters)
    }

    /// Nested-array JSON; a leaf `σ_i^e` becomes `[i, e]` and an empty leaf
    /// becomes `[0, 0]`.
    pub fn to_json(&self) -> Value {
        match self {
            IteratedSequence::Leaf(w) => {
                let g = w.letters().first().copied().unwrap_or(0);
                json!([g, w.len()])
            }
            IteratedSequence::Node(children) => {
                Value::Array(children.iter().map(|c| c.to_json()).collect())
            }
        }
    }

    /// Applies a letter transform to every leaf.
    pub(crate) fn map_letters(&self, f: &impl Fn(u16) -> u16, strands: u16) -> IteratedSequence {
        match self {
            IteratedSequence::Leaf(w) => IteratedSequence::Leaf(PositiveBraidWord::from_raw(
                strands,
                w.letters().iter().map(|&i| f(i)).collect(),
            )),
            IteratedSequence::Node(children) => {
                IteratedSequence::Node(children.iter().map(|c| c.map_letters(f, strands)).collect())
            }
        }
    }
}

impl fmt::Display for IteratedSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IteratedSequence::Leaf(w) => {
                if w.is_empty() {
                    write!(f, "e")
                } else {
                    write!(f, "{w}")
                }
            }
            IteratedSequence::Node(children) => {
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

/// One extraction step of the iterated decomposition, as printed in traces.
#[derive(Debug, Clone)]
pub struct DecompositionStep {
    pub r: usize,
    pub address: GeneralAddress,
    pub binary: BinaryAddress,
    pub extracted: PositiveBraidWord,
    /// The remainder word after this extraction.
    pub remainder: PositiveBraidWord,
}

/// The unique alternating decomposition of `w` along two parabolic
/// submonoids whose union generates the monoid.
///
/// Returns `(x_p, ..., x_1)` leftmost first; `x_1` sits in the submonoid on
/// `i1`, `x_2` in the one on `i2`, alternating upward. Entries other than
/// `x_1` are never trivial.
pub fn alternating_decomposition(
    w: &PositiveBraidWord,
    i2: &ParabolicIndexSet,
    i1: &ParabolicIndexSet,
) -> Result<Vec<PositiveBraidWord>> {
    let n = w.strands();
    for atom in 1..n {
        if !i1.contains(atom) && !i2.contains(atom) {
            return Err(Error::NotACovering(format!(
                "generator {atom} lies in neither index set"
            )));
        }
    }
    let mut entries: Vec<PositiveBraidWord> = Vec::new();
    let mut rest = w.clone();
    let mut r = 1usize;
    loop {
        let set = if r % 2 == 1 { i1 } else { i2 };
        let (t, q) = garside::tail(&rest, set);
        if r >= 2 && t.is_empty() && !q.is_empty() {
            return Err(Error::Invariant(
                "non-final alternating entry is trivial; the sets do not cover".into(),
            ));
        }
        entries.push(t);
        rest = q;
        if rest.is_empty() {
            break;
        }
        r += 1;
    }
    entries.reverse();
    Ok(entries)
}

/// The iterated decomposition of `w` along a covering, together with the
/// extraction trace.
///
/// Follows the global address rule: extract the full tail at the current
/// leaf, then move to the successor determined by the longest prefix whose
/// submonoid still divides the remainder.
pub fn iterated_decomposition(
    w: &PositiveBraidWord,
    c: &CoveringTree,
) -> Result<(IteratedSequence, Vec<DecompositionStep>)> {
    if w.strands() != c.strands() {
        return Err(Error::StrandMismatch(w.strands(), c.strands()));
    }
    let depth = c.depth();
    if w.is_empty() {
        return Ok((singleton_chain(depth, w.clone()), Vec::new()));
    }
    let mut theta = GeneralAddress::ones(depth);
    let mut rest: Vec<u16> = w.letters().to_vec();
    let mut form = GreedyForm::of_word(w);
    let mut entries: Vec<(GeneralAddress, PositiveBraidWord)> = Vec::new();
    let mut trace: Vec<DecompositionStep> = Vec::new();
    let mut r = 1usize;
    loop {
        let binary = theta.reduce();
        let g = c.leaf(&binary)?;
        let mut count = 0usize;
        while form.divisible_by(g) {
            rest = garside::reversing_quotient(&rest, g)
                .ok_or_else(|| Error::Invariant("engines disagree on divisibility".into()))?;
            form.right_div_atom(g)?;
            count += 1;
        }
        let extracted = PositiveBraidWord::from_raw(w.strands(), vec![g; count]);
        entries.push((theta.clone(), extracted.clone()));
        trace.push(DecompositionStep {
            r,
            address: theta.clone(),
            binary: binary.clone(),
            extracted,
            remainder: PositiveBraidWord::from_raw(w.strands(), rest.clone()),
        });
        if form.is_trivial() {
            break;
        }
        let divisors = ParabolicIndexSet::new(form.right_divisor_atoms());
        let mut m = None;
        for len in (0..depth).rev() {
            let prefix = theta.reduce();
            let prefix_digits = &prefix.digits()[..len];
            let letters = c.letters_under(prefix_digits);
            if divisors.iter().any(|i| letters.contains(i)) {
                m = Some(len);
                break;
            }
        }
        let m = m.ok_or_else(|| Error::Invariant("nonempty remainder with no divisor".into()))?;
        theta = theta.successor(m)?;
        r += 1;
        // Runaway guard: between extractions at most two trivial entries can
        // appear per skeleton level (each subtree level has two children and
        // the remainder divides into one of them).
        if r > (w.len() + 2) * (2 * depth + 2) + 8 {
            return Err(Error::Invariant("decomposition failed to terminate".into()));
        }
    }
    let tree = assemble(&entries, depth);
    Ok((tree, trace))
}

fn singleton_chain(depth: usize, w: PositiveBraidWord) -> IteratedSequence {
    let mut t = IteratedSequence::Leaf(w);
    for _ in 0..depth {
        t = IteratedSequence::Node(vec![t]);
    }
    t
}

/// Rebuilds the tree from entries listed rightmost-first with ascending
/// addresses.
fn assemble(entries: &[(GeneralAddress, PositiveBraidWord)], depth: usize) -> IteratedSequence {
    fn go(items: &[(&[u32], &PositiveBraidWord)], depth: usize) -> IteratedSequence {
        if depth == 0 {
            debug_assert_eq!(items.len(), 1);
            return IteratedSequence::Leaf(items[0].1.clone());
        }
        let mut children: Vec<IteratedSequence> = Vec::new();
        let mut start = 0usize;
        while start < items.len() {
            let digit = items[start].0[0];
            let mut end = start;
            while end < items.len() && items[end].0[0] == digit {
                end += 1;
            }
            let sub: Vec<(&[u32], &PositiveBraidWord)> = items[start..end]
                .iter()
                .map(|(d, w)| (&d[1..], *w))
                .collect();
            children.push(go(&sub, depth - 1));
            start = end;
        }
        children.reverse(); // display order is index p .. 1
        IteratedSequence::Node(children)
    }
    let items: Vec<(&[u32], &PositiveBraidWord)> =
        entries.iter().map(|(a, w)| (a.digits(), w)).collect();
    go(&items, depth)
}

/// One attempted division in the letterwise normal-form algorithm.
#[derive(Debug, Clone)]
pub struct NormalizeTrial {
    pub m: usize,
    pub address: BinaryAddress,
    pub generator: u16,
    pub divides: bool,
}

/// One letter extraction of the letterwise normal-form algorithm: the state
/// before the step and the divisions attempted.
#[derive(Debug, Clone)]
pub struct NormalizeStep {
    pub k: usize,
    /// Remaining word before this step.
    pub word: PositiveBraidWord,
    /// Normal word accumulated so far (left of the remaining word).
    pub normal_prefix: PositiveBraidWord,
    pub address_before: BinaryAddress,
    pub trials: Vec<NormalizeTrial>,
}

/// The unique normal word equivalent to `w` along a dense covering.
pub fn mnormal(w: &PositiveBraidWord, c: &CoveringTree) -> Result<PositiveBraidWord> {
    Ok(mnormal_inner(w, c, false)?.0)
}

/// Same as [`mnormal`], returning the per-letter trace.
pub fn mnormal_traced(
    w: &PositiveBraidWord,
    c: &CoveringTree,
) -> Result<(PositiveBraidWord, Vec<NormalizeStep>)> {
    let (word, steps) = mnormal_inner(w, c, true)?;
    Ok((word, steps))
}

fn mnormal_inner(
    w: &PositiveBraidWord,
    c: &CoveringTree,
    traced: bool,
) -> Result<(PositiveBraidWord, Vec<NormalizeStep>)> {
    if w.strands() != c.strands() {
        return Err(Error::StrandMismatch(w.strands(), c.strands()));
    }
    if !c.is_dense() {
        return Err(Error::NotDense);
    }
    let depth = c.depth();
    let mut alpha = BinaryAddress::ones(depth);
    let mut rest: Vec<u16> = w.letters().to_vec();
    let mut out: Vec<u16> = Vec::with_capacity(w.len()); // collected rightmost-first
    let mut steps: Vec<NormalizeStep> = Vec::new();
    let mut k = 0usize;
    while !rest.is_empty() {
        // One full division-engine pass per extracted letter, as in the
        // letterwise algorithm: linear work per letter, quadratic overall.
        let divisors = GreedyForm::of_letters(w.strands(), &rest).right_divisor_atoms();
        let mut trials = Vec::new();
        let mut hit: Option<(BinaryAddress, u16)> = None;
        for m in (0..=depth).rev() {
            let address = alpha.successor(m)?;
            let generator = c.leaf(&address)?;
            let divides = divisors.contains(&generator);
            trials.push(NormalizeTrial {
                m,
                address: address.clone(),
                generator,
                divides,
            });
            if divides {
                hit = Some((address, generator));
                break;
            }
        }
        let (address, g) =
            hit.ok_or_else(|| Error::Invariant("dense covering offered no divisor".into()))?;
        if traced {
            steps.push(NormalizeStep {
                k,
                word: PositiveBraidWord::from_raw(w.strands(), rest.clone()),
                normal_prefix: normal_word(w.strands(), &out),
                address_before: alpha.clone(),
                trials,
            });
        }
        rest = garside::reversing_quotient(&rest, g)
            .ok_or_else(|| Error::Invariant("engines disagree on divisibility".into()))?;
        out.push(g);
        alpha = address;
        k += 1;
    }
    let result = normal_word(w.strands(), &out);
    if traced {
        steps.push(NormalizeStep {
            k,
            word: PositiveBraidWord::empty(w.strands())?,
            normal_prefix: result.clone(),
            address_before: alpha,
            trials: Vec::new(),
        });
    }
    Ok((result, steps))
}

fn normal_word(strands: u16, collected_rightmost_first: &[u16]) -> PositiveBraidWord {
    PositiveBraidWord::from_raw(
        strands,
        collected_rightmost_first.iter().rev().copied().collect(),
    )
}

/// Rebuilds the braid from an exponent tree: the leaf at address `α` with
/// exponent `e` contributes `g_α^e`, concatenated leftmost first.
pub fn reconstruct(exponents: &ExponentTree, c: &CoveringTree) -> Result<PositiveBraidWord> {
    fn go(
        t: &ExponentTree,
        c: &CoveringTree,
        path: &mut Vec<u8>,
        letters: &mut Vec<u16>,
    ) -> Result<()> {
        match t {
            ExponentTree::Leaf(e) => {
                if path.len() != c.depth() {
                    return Err(Error::ShapeMismatch(format!(
                        "leaf at depth {} in a depth-{} covering",
                        path.len(),
                        c.depth()
                    )));
                }
                let g = c.leaf(&BinaryAddress::new(path.clone())?)?;
                letters.extend(std::iter::repeat_n(g, *e as usize));
                Ok(())
            }
            ExponentTree::Node(children) => {
                if path.len() >= c.depth() {
                    return Err(Error::ShapeMismatch("tree deeper than the covering".into()));
                }
                let p = children.len();
                for (j, child) in children.iter().enumerate() {
                    let index_from_right = (p - j) as u32; // children are p..1
                    path.push(if index_from_right % 2 == 1 { 1 } else { 2 });
                    go(child, c, path, letters)?;
                    path.pop();
                }
                Ok(())
            }
        }
    }
    let mut letters = Vec::new();
    let mut path = Vec::new();
    go(exponents, c, &mut path, &mut letters)?;
    Ok(PositiveBraidWord::from_raw(c.strands(), letters))
}
