//! The canonical well-ordering of positive braids and its derived
//! decisions.
//!
//! Two routes compute the same order: recursive comparison of splittings
//! (breadth first, then entrywise from the left) and ShortLex comparison of
//! exponent trees. They must agree; `compare_plus` checks this in debug
//! builds and `compare_plus_checked` always does. The order coincides with
//! the standard left-invariant braid order, which is what makes the sign
//! decision for signed words work: rewrite the word as `Δ_n^{-k} · v` with
//! `v` positive and compare `v` against `Δ_n^k`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::garside::{self};
use crate::splitting;
use crate::word::{delta, delta_hat, Generator, PositiveBraidWord, SignedBraidWord};

pub use crate::splitting::shortlex_compare;

/// Route A: recursive splitting comparison.
fn route_splitting(x: &PositiveBraidWord, y: &PositiveBraidWord) -> Result<Ordering> {
    let n = x.strands();
    if n == 2 {
        return Ok(x.len().cmp(&y.len()));
    }
    let sx = splitting::braid_splitting(x, n)?;
    let sy = splitting::braid_splitting(y, n)?;
    match sx.breadth().cmp(&sy.breadth()) {
        Ordering::Equal => {}
        other => return Ok(other),
    }
    for (ex, ey) in sx.entries().iter().zip(sy.entries().iter()) {
        if garside::equivalent(ex, ey) {
            continue;
        }
        return route_splitting(ex, ey);
    }
    Ok(Ordering::Equal)
}

/// Route B: ShortLex on exponent trees.
fn route_exponents(x: &PositiveBraidWord, y: &PositiveBraidWord) -> Result<Ordering> {
    let tx = splitting::exponent_sequence(&splitting::braid_decomposition(x)?);
    let ty = splitting::exponent_sequence(&splitting::braid_decomposition(y)?);
    Ok(shortlex_compare(&tx, &ty))
}

/// Compares two positive braids in the canonical well-ordering.
///
/// Uses the exponent-tree route; debug builds recompute the splitting route
/// and fault on disagreement.
pub fn compare_plus(x: &PositiveBraidWord, y: &PositiveBraidWord) -> Result<Ordering> {
    if x.strands() != y.strands() {
        return Err(Error::StrandMismatch(x.strands(), y.strands()));
    }
    if garside::equivalent(x, y) {
        return Ok(Ordering::Equal);
    }
    let b = route_exponents(x, y)?;
    #[cfg(debug_assertions)]
    {
        let a = route_splitting(x, y)?;
        if a != b {
            return Err(Error::Invariant(format!(
                "order routes disagree on {x} vs {y}: splitting {a:?}, exponents {b:?}"
            )));
        }
    }
    Ok(b)
}

/// Like [`compare_plus`] but always runs both routes and faults on
/// disagreement, in every build profile.
pub fn compare_plus_checked(x: &PositiveBraidWord, y: &PositiveBraidWord) -> Result<Ordering> {
    if x.strands() != y.strands() {
        return Err(Error::StrandMismatch(x.strands(), y.strands()));
    }
    if garside::equivalent(x, y) {
        let a = route_splitting(x, y)?;
        let b = route_exponents(x, y)?;
        if a != Ordering::Equal || b != Ordering::Equal {
            return Err(Error::Invariant(format!(
                "equivalent braids compare unequal: {x} vs {y}"
            )));
        }
        return Ok(Ordering::Equal);
    }
    let a = route_splitting(x, y)?;
    let b = route_exponents(x, y)?;
    if a != b {
        return Err(Error::Invariant(format!(
            "order routes disagree on {x} vs {y}: splitting {a:?}, exponents {b:?}"
        )));
    }
    Ok(a)
}

/// Position of a braid-group element relative to the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Negative => write!(f, "negative"),
            Sign::Zero => write!(f, "zero"),
            Sign::Positive => write!(f, "positive"),
        }
    }
}

/// Decides how the braid of a signed word compares to the identity.
///
/// Left-to-right scan: each `σ_i^{-1}` becomes `c · Δ_n^{-1}` with
/// `σ_i c = Δ_n`, and each accumulated `Δ_n^{-1}` commutes leftward past a
/// positive word by flipping it. The result is `Δ_n^{-k} · v`, so the sign
/// is the comparison of `v` with `Δ_n^k`.
pub fn sign(w: &SignedBraidWord) -> Result<Sign> {
    let n = w.strands();
    let mut complements: Vec<Option<Vec<u16>>> = vec![None; n as usize];
    let mut v: Vec<u16> = Vec::new();
    let mut k = 0u32;
    for letter in w.letters() {
        let i = letter.gen.index();
        if letter.positive {
            v.push(i);
        } else {
            let c = match &complements[i as usize] {
                Some(c) => c.clone(),
                None => {
                    let c: Vec<u16> = garside::left_quotient_delta(letter.gen, n)?
                        .letters()
                        .to_vec();
                    complements[i as usize] = Some(c.clone());
                    c
                }
            };
            v.extend(c);
            for x in v.iter_mut() {
                *x = n - *x;
            }
            k += 1;
        }
    }
    let v = PositiveBraidWord::from_raw(n, v);
    if k == 0 {
        return Ok(if v.is_empty() {
            Sign::Zero
        } else {
            Sign::Positive
        });
    }
    let dk = delta(n)?.pow(k);
    Ok(match compare_plus(&dk, &v)? {
        Ordering::Less => Sign::Positive,
        Ordering::Equal => Sign::Zero,
        Ordering::Greater => Sign::Negative,
    })
}

/// An ordinal below `ω^ω` in Cantor normal form: a strictly descending list
/// of `(exponent, coefficient)` terms with positive coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrdinalCnf {
    terms: Vec<(u32, u64)>,
}

impl OrdinalCnf {
    pub fn zero() -> OrdinalCnf {
        OrdinalCnf { terms: Vec::new() }
    }

    /// Builds from terms in strictly descending exponent order; zero
    /// coefficients are dropped.
    pub fn from_terms(terms: impl IntoIterator<Item = (u32, u64)>) -> Result<OrdinalCnf> {
        let mut out: Vec<(u32, u64)> = Vec::new();
        for (e, c) in terms {
            if c == 0 {
                continue;
            }
            if let Some(&(last, _)) = out.last() {
                if e >= last {
                    return Err(Error::Domain(
                        "CNF exponents must be strictly descending".into(),
                    ));
                }
            }
            out.push((e, c));
        }
        Ok(OrdinalCnf { terms: out })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(u32, u64)] {
        &self.terms
    }
}

impl PartialOrd for OrdinalCnf {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OrdinalCnf {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(other.terms.iter()) {
            match a.0.cmp(&b.0) {
                Ordering::Equal => {}
                other => return other,
            }
            match a.1.cmp(&b.1) {
                Ordering::Equal => {}
                other => return other,
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl fmt::Display for OrdinalCnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for &(e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{c}")?,
                1 => {
                    write!(f, "w")?;
                    if c > 1 {
                        write!(f, "*{c}")?;
                    }
                }
                _ => {
                    write!(f, "w^{e}")?;
                    if c > 1 {
                        write!(f, "*{c}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

/// Comparison of ordinals in Cantor normal form.
pub fn ordinal_compare(a: &OrdinalCnf, b: &OrdinalCnf) -> Ordering {
    a.cmp(b)
}

/// Renders an ordinal as text, e.g. `w^3*2 + w + 4`.
pub fn ordinal_format(a: &OrdinalCnf) -> String {
    a.to_string()
}

/// The position of a 3-strand positive braid in the well-ordering: with
/// normal-form profile `(e_p, ..., e_1)` the rank is
/// `ω^{p-1}·e_p + Σ_{r<p} ω^{r-1}·(e_r - floor_r)`.
pub fn rank_b3(x: &PositiveBraidWord) -> Result<OrdinalCnf> {
    if x.strands() != 3 {
        return Err(Error::StrandMismatch(x.strands(), 3));
    }
    let nf = crate::phinormal::phi_normalize(x)?;
    let profile = crate::phinormal::b3_exponent_profile(&nf)?;
    let p = profile.len();
    let mut terms: Vec<(u32, u64)> = Vec::new();
    for (j, &e) in profile.iter().enumerate() {
        let r = p - j;
        let coeff = if r == p {
            e as u64
        } else {
            let floor = crate::phinormal::b3_min_exponent(r);
            debug_assert!(e >= floor, "normal profile below its floor");
            (e - floor) as u64
        };
        terms.push((r as u32 - 1, coeff));
    }
    OrdinalCnf::from_terms(terms)
}

/// The least upper bound of the braids of breadth at most `p`, namely the
/// zigzag with `p-1` runs. Defined for `p >= 2`.
pub fn least_upper_bound_witness(n: u16, p: usize) -> Result<PositiveBraidWord> {
    if p < 2 {
        return Err(Error::Domain("the breadth bound must be at least 2".into()));
    }
    delta_hat(n, p as u32 - 1)
}

/// Convenience: `x <+ y`.
pub fn less_plus(x: &PositiveBraidWord, y: &PositiveBraidWord) -> Result<bool> {
    Ok(compare_plus(x, y)? == Ordering::Less)
}

/// Right-multiplies `x` by one generator.
pub fn append(x: &PositiveBraidWord, g: Generator) -> Result<PositiveBraidWord> {
    let mut out = x.clone();
    out.push(g)?;
    Ok(out)
}
