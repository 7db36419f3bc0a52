//! The cross-module oracle suite behind the `verify` subcommand.
//!
//! Every check pits a fast engine against the exhaustive rewriting oracle on
//! a full lattice of short words and reports mismatch counts. `Quick` trims
//! the lattices to keep the run short; `Full` covers the sizes used by the
//! acceptance tests.

use serde::Serialize;

use crate::error::Result;
use crate::garside::{self, ParabolicIndexSet};
use crate::oracle;
use crate::phinormal;
use crate::word::Generator;

/// How much of the lattice to cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Quick,
    Full,
}

impl std::str::FromStr for Level {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "quick" => Ok(Level::Quick),
            "full" => Ok(Level::Full),
            other => Err(format!("unknown level {other:?} (expected quick or full)")),
        }
    }
}

/// Outcome of one named check.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub cases: usize,
    pub mismatches: usize,
    pub passed: bool,
}

/// The whole suite's outcome.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub level: Level,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

fn lattices(level: Level) -> Vec<(u16, usize)> {
    match level {
        Level::Quick => vec![(3, 5), (4, 4)],
        Level::Full => vec![(3, 7), (4, 6)],
    }
}

/// Runs the suite.
pub fn run(level: Level) -> Result<VerifyReport> {
    let mut checks = Vec::new();

    // Divisibility: descent sets versus suffix inspection.
    {
        let mut cases = 0usize;
        let mut mismatches = 0usize;
        for &(n, max) in &lattices(level) {
            for word in oracle::all_words(n, 0..=max) {
                let class = oracle::equivalence_class(&word, None)?;
                for i in 1..n {
                    cases += 1;
                    let fast = garside::right_divides(&word, Generator::new(i)?);
                    let slow = class.iter().any(|m| m.letters().last() == Some(&i));
                    if fast != slow {
                        mismatches += 1;
                    }
                }
            }
        }
        checks.push(CheckResult {
            name: "right-divisibility agrees with the rewriting oracle".into(),
            cases,
            mismatches,
            passed: mismatches == 0,
        });
    }

    // Equality: canonical forms versus class membership.
    {
        let mut cases = 0usize;
        let mut mismatches = 0usize;
        for &(n, max) in &lattices(level) {
            let words = oracle::all_words(n, 0..=max.min(5));
            for u in &words {
                let class = oracle::equivalence_class(u, None)?;
                for v in &words {
                    if u.len() != v.len() {
                        continue;
                    }
                    cases += 1;
                    let fast = garside::equivalent(u, v);
                    let slow = class.contains(v);
                    if fast != slow {
                        mismatches += 1;
                    }
                }
            }
        }
        checks.push(CheckResult {
            name: "word equivalence agrees with the rewriting oracle".into(),
            cases,
            mismatches,
            passed: mismatches == 0,
        });
    }

    // Tails: the decomposition property characterises them uniquely.
    {
        let mut cases = 0usize;
        let mut mismatches = 0usize;
        for &(n, max) in &lattices(level) {
            let sets: Vec<ParabolicIndexSet> = (1..n)
                .map(|hi| ParabolicIndexSet::range(1, hi))
                .chain(std::iter::once(ParabolicIndexSet::range(2, n - 1)))
                .collect();
            for word in oracle::all_words(n, 0..=max.min(5)) {
                for set in &sets {
                    cases += 1;
                    let (t, rest) = garside::tail(&word, set);
                    let ok = t.lies_in(|i| set.contains(i))
                        && oracle::oracle_equivalent(&rest.concat(&t)?, &word, None)?
                        && set.iter().all(|i| {
                            !matches!(
                                oracle::oracle_right_divides(
                                    &rest,
                                    Generator::new(i).unwrap(),
                                    None
                                ),
                                Ok(true)
                            )
                        });
                    if !ok {
                        mismatches += 1;
                    }
                }
            }
        }
        checks.push(CheckResult {
            name: "parabolic tails satisfy the defining decomposition".into(),
            cases,
            mismatches,
            passed: mismatches == 0,
        });
    }

    // Normal form coincides with the ShortLex-minimal class member.
    {
        let mut cases = 0usize;
        let mut mismatches = 0usize;
        for &(n, max) in &lattices(level) {
            for word in oracle::all_words(n, 0..=max) {
                cases += 1;
                let fast = phinormal::phi_normalize(&word)?;
                let slow = oracle::burckel_normal_of(&word, None)?;
                if fast != slow {
                    mismatches += 1;
                }
            }
        }
        checks.push(CheckResult {
            name: "letterwise normal form is the minimal-exponent representative".into(),
            cases,
            mismatches,
            passed: mismatches == 0,
        });
    }

    // Canonical forms separate classes exactly.
    {
        let mut cases = 0usize;
        let mut mismatches = 0usize;
        for &(n, max) in &lattices(level) {
            let words = oracle::all_words(n, 0..=max.min(5));
            for u in &words {
                for v in &words {
                    if u.len() != v.len() {
                        continue;
                    }
                    cases += 1;
                    let fast = garside::greedy(u) == garside::greedy(v);
                    let slow = oracle::oracle_equivalent(u, v, None)?;
                    if fast != slow {
                        mismatches += 1;
                    }
                }
            }
        }
        checks.push(CheckResult {
            name: "canonical forms coincide exactly on equivalence classes".into(),
            cases,
            mismatches,
            passed: mismatches == 0,
        });
    }

    let passed = checks.iter().all(|c| c.passed);
    Ok(VerifyReport {
        level,
        checks,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suite_passes() {
        let report = run(Level::Quick).unwrap();
        assert!(report.passed, "{report:?}");
        assert_eq!(report.checks.len(), 5);
        for c in &report.checks {
            assert!(c.cases > 0);
        }
    }
}
