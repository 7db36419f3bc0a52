//! The normal form attached to the canonical flip covering.
//!
//! `phi_normalize` is the letterwise algorithm of the covering module run on
//! the canonical skeleton; it is re-exported here with braid-specific entry
//! points and the trace format used by the CLI. Normality can be recognised
//! without normalising, by replaying either the address state or the
//! equivalent generator-priority permutation; both checkers are implemented
//! and must agree. On three strands the normal words have a closed form in
//! terms of exponent floors.

use crate::covering::{self, BinaryAddress, CoveringTree, NormalizeStep};
use crate::error::{Error, Result};
use crate::garside::GreedyForm;
use crate::splitting;
use crate::word::PositiveBraidWord;

pub use crate::covering::NormalizeTrial;

/// The unique normal word equivalent to `w` along the canonical covering.
pub fn phi_normalize(w: &PositiveBraidWord) -> Result<PositiveBraidWord> {
    let c = covering::base_sequence(w.strands())?;
    covering::mnormal(w, &c)
}

/// Same, with the per-letter trace (state before each step plus the
/// attempted divisions).
pub fn phi_normalize_traced(
    w: &PositiveBraidWord,
) -> Result<(PositiveBraidWord, Vec<NormalizeStep>)> {
    let c = covering::base_sequence(w.strands())?;
    covering::mnormal_traced(w, &c)
}

/// The local generator priority attached to an address: `priority[0]` is the
/// generator tried first (the address itself), then successively shorter
/// successors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalityState {
    address: BinaryAddress,
}

impl NormalityState {
    pub fn initial(depth: usize) -> NormalityState {
        NormalityState {
            address: BinaryAddress::ones(depth),
        }
    }

    pub fn new(address: BinaryAddress) -> NormalityState {
        NormalityState { address }
    }

    pub fn address(&self) -> &BinaryAddress {
        &self.address
    }

    /// The generator names of the successors, most-urgent first
    /// (`m = depth` down to `m = 0`).
    pub fn priority(&self, c: &CoveringTree) -> Result<Vec<u16>> {
        let mut out = Vec::with_capacity(c.depth() + 1);
        for m in (0..=c.depth()).rev() {
            out.push(c.leaf(&self.address.successor(m)?)?);
        }
        Ok(out)
    }

    /// Recovers the address from a priority vector, if one exists.
    pub fn from_priority(priority: &[u16], c: &CoveringTree) -> Result<Option<NormalityState>> {
        let depth = c.depth();
        for idx in 0..(1usize << depth) {
            let digits: Vec<u8> = (0..depth)
                .map(|j| (((idx >> (depth - 1 - j)) & 1) as u8) + 1)
                .collect();
            let state = NormalityState::new(BinaryAddress::new(digits)?);
            if state.priority(c)? == priority {
                return Ok(Some(state));
            }
        }
        Ok(None)
    }
}

/// Right-divisor atom sets of every prefix of `w`, `divisors[j]` belonging
/// to the first `j` letters.
fn prefix_divisors(w: &PositiveBraidWord) -> Vec<Vec<u16>> {
    let mut out = Vec::with_capacity(w.len() + 1);
    let mut form = GreedyForm::of_word(&PositiveBraidWord::empty(w.strands()).expect("n >= 2"));
    out.push(Vec::new());
    for &i in w.letters() {
        form.right_mul_atom(i);
        out.push(form.right_divisor_atoms());
    }
    out
}

fn checker_addresses(w: &PositiveBraidWord) -> Result<bool> {
    let n = w.strands();
    let c = covering::base_sequence(n)?;
    let depth = c.depth();
    let divisors = prefix_divisors(w);
    let len = w.len();
    let mut alpha = BinaryAddress::ones(depth);
    for k in 1..=len {
        let prefix_len = len - k + 1;
        let available = &divisors[prefix_len];
        let mut chosen: Option<(BinaryAddress, u16)> = None;
        for m in (0..=depth).rev() {
            let addr = alpha.successor(m)?;
            let g = c.leaf(&addr)?;
            if available.contains(&g) {
                chosen = Some((addr, g));
                break;
            }
        }
        let (addr, g) = chosen
            .ok_or_else(|| Error::Invariant("nonempty prefix with no dividing successor".into()))?;
        if w.letters()[prefix_len - 1] != g {
            return Ok(false);
        }
        alpha = addr;
    }
    Ok(true)
}

fn checker_permutations(w: &PositiveBraidWord) -> Result<bool> {
    let n = w.strands();
    let divisors = prefix_divisors(w);
    let len = w.len();
    let mut pi: Vec<u16> = (1..n).collect();
    for k in 1..=len {
        let prefix_len = len - k + 1;
        let available = &divisors[prefix_len];
        let p = pi
            .iter()
            .position(|g| available.contains(g))
            .ok_or_else(|| Error::Invariant("nonempty prefix with no dividing generator".into()))?;
        let head = pi[p];
        if w.letters()[prefix_len - 1] != head {
            return Ok(false);
        }
        // Rotate the skipped generators behind the head, sorted increasingly
        // when they all exceed it and decreasingly when they are all below.
        let mut skipped: Vec<u16> = pi[..p].to_vec();
        if !skipped.is_empty() {
            let above = skipped.iter().all(|&g| g > head);
            let below = skipped.iter().all(|&g| g < head);
            if !(above || below) {
                return Err(Error::Invariant(
                    "priority update saw generators on both sides of the head".into(),
                ));
            }
            skipped.sort_unstable();
            if below {
                skipped.reverse();
            }
        }
        let mut next = Vec::with_capacity(pi.len());
        next.push(head);
        next.extend(skipped);
        next.extend_from_slice(&pi[p + 1..]);
        pi = next;
    }
    Ok(true)
}

/// Whether `w` is already the normal form of its braid.
///
/// Runs both the address checker and the permutation checker; a
/// disagreement is an internal fault.
pub fn is_phi_normal(w: &PositiveBraidWord) -> Result<bool> {
    let a = checker_addresses(w)?;
    let b = checker_permutations(w)?;
    if a != b {
        return Err(Error::Invariant(format!(
            "normality checkers disagree on {w}: addresses say {a}, permutations say {b}"
        )));
    }
    Ok(a)
}

/// The exponent floor for position `r` (from the right) in a normal
/// 3-strand word: 0, 1, 2, 2, ...
pub fn b3_min_exponent(r: usize) -> u32 {
    match r {
        0 => 0, // unused; positions are 1-based
        1 => 0,
        2 => 1,
        _ => 2,
    }
}

/// The closed-form normality test on 3 strands: a profile `(e_p, ..., e_1)`
/// (leftmost first) is normal iff `e_p >= 1` and every other position meets
/// its floor.
pub fn b3_normal_test(exponents: &[u32]) -> bool {
    let p = exponents.len();
    if p == 0 {
        return true;
    }
    if p == 1 {
        return true; // a bare power of σ1, including the empty word
    }
    if exponents[0] < 1 {
        return false;
    }
    for (j, &e) in exponents.iter().enumerate().skip(1) {
        let r = p - j;
        if e < b3_min_exponent(r) {
            return false;
        }
    }
    true
}

/// The run-length profile `(e_p, ..., e_1)` of a 3-strand word, leftmost
/// first: the word reads `σ_{[p]}^{e_p} ... σ_2^{e_2} σ_1^{e_1}`.
pub fn b3_exponent_profile(w: &PositiveBraidWord) -> Result<Vec<u32>> {
    if w.strands() != 3 {
        return Err(Error::StrandMismatch(w.strands(), 3));
    }
    let entries = splitting::word_splitting(w, 3)?;
    Ok(entries.iter().map(|e| e.len() as u32).collect())
}
