//! Acceptance suite: one test per criterion, each printing a PASS line.
//!
//! Run with `cargo test -p phinorm --test acceptance -- --nocapture` to see
//! the per-criterion lines.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use phinorm::covering::{self, CoveringTree};
use phinorm::garside::{self, ParabolicIndexSet};
use phinorm::oracle;
use phinorm::ordering::{self, OrdinalCnf};
use phinorm::phinormal;
use phinorm::splitting::{self, ExponentTree};
use phinorm::word::{delta, delta_hat, delta_small, parse_positive, Generator, PositiveBraidWord};

fn pass(name: &str) {
    println!("ACCEPTANCE PASS: {name}");
}

fn w(n: u16, s: &str) -> PositiveBraidWord {
    parse_positive(s, Some(n)).unwrap()
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_phinorm"))
}

fn random_word(rng: &mut impl Rng, n: u16, max_len: usize) -> PositiveBraidWord {
    let len = rng.gen_range(0..=max_len);
    PositiveBraidWord::from_indices(n, (0..len).map(|_| rng.gen_range(1..n))).unwrap()
}

const FULL_TWIST_B4: &str = "1 2 1 3 2 1 1 2 1 3 2 1";
const FULL_TWIST_B4_NORMAL: &str = "3 2 1 1 2 3 2 1 1 2 1 1";

/// Criterion 1: the decomposition trace of the squared half-twist on four
/// strands reproduces the nine known rows exactly, in under a second.
#[test]
fn golden_decomposition_trace_full_twist_b4() {
    let golden: [(&str, &str, &str, &str, &str); 9] = [
        ("1", "2 1 3 2 1 1 2 3 1 2", "11", "11", "1 1"),
        ("2", "2 1 3 2 1 1 2 3 1", "12", "12", "2"),
        ("3", "2 3 2 1 1 2 3", "13", "11", "1 1"),
        ("4", "3 2 1 1 2 3", "14", "12", "2"),
        ("5", "3 2 1 1 2", "21", "21", "3"),
        ("6", "3 2 1 1", "22", "22", "2"),
        ("7", "3 2", "31", "11", "1 1"),
        ("8", "3", "32", "12", "2"),
        ("9", "", "41", "21", "3"),
    ];

    // Library route.
    let input = w(4, FULL_TWIST_B4);
    let c = covering::base_sequence(4).unwrap();
    let started = Instant::now();
    let (_, trace) = covering::iterated_decomposition(&input, &c).unwrap();
    let elapsed = started.elapsed();
    assert_eq!(trace.len(), 9);
    for (step, want) in trace.iter().zip(golden.iter()) {
        assert_eq!(step.r.to_string(), want.0);
        assert_eq!(step.remainder.to_string(), want.1);
        assert_eq!(step.address.to_string(), want.2);
        assert_eq!(step.binary.to_string(), want.3);
        assert_eq!(step.extracted.to_string(), want.4);
    }
    assert!(
        elapsed.as_secs_f64() < 1.0,
        "decomposition took {elapsed:?}"
    );

    // CLI route.
    let started = Instant::now();
    let out = bin()
        .args(["decompose", "--strands", "4", "--trace", FULL_TWIST_B4])
        .output()
        .expect("binary runs");
    let elapsed = started.elapsed();
    assert!(out.status.success());
    assert!(
        elapsed.as_secs_f64() < 1.0,
        "CLI decomposition took {elapsed:?}"
    );
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("r,remainder,address,address_binary,extracted")
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 9);
    for (row, want) in rows.iter().zip(golden.iter()) {
        let expect = format!("{},{},{},{},{}", want.0, want.1, want.2, want.3, want.4);
        assert_eq!(*row, expect);
    }
    pass("golden decomposition trace (squared half-twist, 4 strands)");
}

/// Criterion 2: the letterwise normalization trace reproduces the known
/// twelve steps (remaining word, accumulated normal word, tried addresses,
/// verdicts) and the final normal word, in under a second.
#[test]
fn golden_normalization_trace_full_twist_b4() {
    // (k, w_k, w'_k, [(m, address, generator, verdict)...])
    #[allow(clippy::type_complexity)]
    let golden: Vec<(usize, &str, &str, Vec<(usize, &str, u16, bool)>)> = vec![
        (0, "1 2 1 3 2 1 1 2 1 3 2 1", "", vec![(2, "11", 1, true)]),
        (1, "1 2 1 3 2 1 1 2 1 3 2", "1", vec![(2, "11", 1, true)]),
        (
            2,
            "2 1 3 2 1 1 2 3 1 2",
            "1 1",
            vec![(2, "11", 1, false), (1, "12", 2, true)],
        ),
        (
            3,
            "2 1 3 2 1 1 2 3 1",
            "2 1 1",
            vec![(2, "12", 2, false), (1, "11", 1, true)],
        ),
        (4, "2 1 3 2 1 1 2 3", "1 2 1 1", vec![(2, "11", 1, true)]),
        (
            5,
            "2 3 2 1 1 2 3",
            "1 1 2 1 1",
            vec![(2, "11", 1, false), (1, "12", 2, true)],
        ),
        (
            6,
            "3 2 1 1 2 3",
            "2 1 1 2 1 1",
            vec![(2, "12", 2, false), (1, "11", 1, false), (0, "21", 3, true)],
        ),
        (
            7,
            "3 2 1 1 2",
            "3 2 1 1 2 1 1",
            vec![(2, "21", 3, false), (1, "22", 2, true)],
        ),
        (
            8,
            "3 2 1 1",
            "2 3 2 1 1 2 1 1",
            vec![(2, "22", 2, false), (1, "21", 3, false), (0, "11", 1, true)],
        ),
        (9, "3 2 1", "1 2 3 2 1 1 2 1 1", vec![(2, "11", 1, true)]),
        (
            10,
            "3 2",
            "1 1 2 3 2 1 1 2 1 1",
            vec![(2, "11", 1, false), (1, "12", 2, true)],
        ),
        (
            11,
            "3",
            "2 1 1 2 3 2 1 1 2 1 1",
            vec![(2, "12", 2, false), (1, "11", 1, false), (0, "21", 3, true)],
        ),
    ];

    let input = w(4, FULL_TWIST_B4);
    let started = Instant::now();
    let (nf, steps) = phinormal::phi_normalize_traced(&input).unwrap();
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs_f64() < 1.0,
        "normalization took {elapsed:?}"
    );
    assert_eq!(nf.to_string(), FULL_TWIST_B4_NORMAL);
    assert_eq!(
        steps.len(),
        13,
        "twelve extraction steps plus the final state"
    );
    for (step, want) in steps.iter().zip(golden.iter()) {
        assert_eq!(step.k, want.0);
        assert_eq!(step.word.to_string(), want.1);
        assert_eq!(step.normal_prefix.to_string(), want.2);
        let got: Vec<(usize, String, u16, bool)> = step
            .trials
            .iter()
            .map(|t| (t.m, t.address.to_string(), t.generator, t.divides))
            .collect();
        let expect: Vec<(usize, String, u16, bool)> = want
            .3
            .iter()
            .map(|&(m, a, g, v)| (m, a.to_string(), g, v))
            .collect();
        assert_eq!(got, expect, "trials at step {}", want.0);
    }
    let last = steps.last().unwrap();
    assert_eq!(last.k, 12);
    assert!(last.word.is_empty());
    assert_eq!(last.normal_prefix.to_string(), FULL_TWIST_B4_NORMAL);

    // CLI route: same content in CSV form.
    let started = Instant::now();
    let out = bin()
        .args(["normalize", "--strands", "4", "--trace", FULL_TWIST_B4])
        .output()
        .expect("binary runs");
    let elapsed = started.elapsed();
    assert!(out.status.success());
    assert!(
        elapsed.as_secs_f64() < 1.0,
        "CLI normalization took {elapsed:?}"
    );
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("k,word,normal_prefix,address_before,m,address,generator,divides")
    );
    let mut expect_rows: Vec<String> = Vec::new();
    for step in &steps[..steps.len() - 1] {
        for t in &step.trials {
            expect_rows.push(format!(
                "{},{},{},{},{},{},{},{}",
                step.k,
                step.word,
                step.normal_prefix,
                step.address_before,
                t.m,
                t.address,
                t.generator,
                if t.divides { "yes" } else { "no" }
            ));
        }
    }
    expect_rows.push(format!("12,,{FULL_TWIST_B4_NORMAL},21,,,,"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(
        rows,
        expect_rows.iter().map(|s| s.as_str()).collect::<Vec<_>>()
    );
    pass("golden normalization trace (squared half-twist, 4 strands)");
}

/// Criterion 3: on every positive word of length <= 7 over three strands and
/// <= 6 over four strands, the letterwise normal form equals the
/// ShortLex-minimal representative found by exhaustion.
#[test]
fn normal_form_coincides_with_exhaustive_minimum() {
    let mut cases = 0usize;
    for (n, max) in [(3u16, 7usize), (4, 6)] {
        for word in oracle::all_words(n, 0..=max) {
            let fast = phinormal::phi_normalize(&word).unwrap();
            let slow = oracle::burckel_normal_of(&word, None).unwrap();
            assert_eq!(fast, slow, "mismatch on {word} over {n} strands");
            cases += 1;
        }
    }
    assert_eq!(cases, 255 + 1093);
    pass("normal form = exhaustive ShortLex minimum (B3 len<=7, B4 len<=6)");
}

/// Criterion 4: the splitting-recursion route and the exponent-tree route of
/// the order agree on every pair from the criterion-3 lattices.
#[test]
fn order_routes_agree_on_all_pairs() {
    for (n, max) in [(3u16, 7usize), (4, 6)] {
        let words = oracle::all_words(n, 0..=max);
        let keys: Vec<String> = words
            .iter()
            .map(|x| garside::greedy(x).canonical_word().to_string())
            .collect();
        let trees: Vec<ExponentTree> = words
            .iter()
            .map(|x| splitting::exponent_sequence(&splitting::braid_decomposition(x).unwrap()))
            .collect();
        let splits: Vec<Vec<PositiveBraidWord>> = words
            .iter()
            .map(|x| splitting::braid_splitting(x, n).unwrap().entries().to_vec())
            .collect();
        let entry_keys: Vec<Vec<String>> = splits
            .iter()
            .map(|es| {
                es.iter()
                    .map(|e| garside::greedy(e).canonical_word().to_string())
                    .collect()
            })
            .collect();
        let mut memo: HashMap<(String, String), Ordering> = HashMap::new();
        let mut mismatches = 0usize;
        for i in 0..words.len() {
            for j in 0..words.len() {
                let route_b = splitting::shortlex_compare(&trees[i], &trees[j]);
                let route_a = match splits[i].len().cmp(&splits[j].len()) {
                    Ordering::Equal => {
                        let mut verdict = Ordering::Equal;
                        for k in 0..splits[i].len() {
                            if entry_keys[i][k] == entry_keys[j][k] {
                                continue;
                            }
                            let key = (entry_keys[i][k].clone(), entry_keys[j][k].clone());
                            verdict = *memo.entry(key).or_insert_with(|| {
                                ordering::compare_plus_checked(&splits[i][k], &splits[j][k])
                                    .unwrap()
                            });
                            break;
                        }
                        verdict
                    }
                    other => other,
                };
                if route_a != route_b {
                    mismatches += 1;
                }
                if route_b == Ordering::Equal {
                    assert_eq!(keys[i], keys[j], "equal order but distinct braids");
                }
            }
        }
        assert_eq!(mismatches, 0, "route disagreements over {n} strands");
    }
    pass("order route agreement on all exhaustive pairs");
}

/// Criterion 5: the order is invariant under multiplication on the left,
/// on ten thousand random triples.
#[test]
fn left_invariance_random_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let mut violations = 0usize;
    for _ in 0..10_000 {
        let n = rng.gen_range(3..=5u16);
        let x = random_word(&mut rng, n, 8);
        let y = random_word(&mut rng, n, 8);
        let z = random_word(&mut rng, n, 8);
        let plain = ordering::compare_plus(&x, &y).unwrap();
        let shifted =
            ordering::compare_plus(&z.concat(&x).unwrap(), &z.concat(&y).unwrap()).unwrap();
        if plain != shifted {
            violations += 1;
        }
    }
    assert_eq!(violations, 0);
    pass("left-invariance on 10,000 random triples");
}

/// Criterion 6: right multiplication strictly increases the order and the
/// word-level exponent tree of the normal form, on ten thousand random
/// samples.
#[test]
fn successor_and_word_monotonicity_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let mut violations = 0usize;
    for _ in 0..10_000 {
        let n = rng.gen_range(3..=5u16);
        let x = random_word(&mut rng, n, 8);
        let i = Generator::new(rng.gen_range(1..n)).unwrap();
        let xi = ordering::append(&x, i).unwrap();
        if ordering::compare_plus(&x, &xi).unwrap() != Ordering::Less {
            violations += 1;
        }
        let u = phinormal::phi_normalize(&x).unwrap();
        let v = phinormal::phi_normalize(&xi).unwrap();
        let tu = splitting::word_exponents(&u, n).unwrap();
        let tv = splitting::word_exponents(&v, n).unwrap();
        if splitting::shortlex_compare(&tu, &tv) != Ordering::Less {
            violations += 1;
        }
    }
    assert_eq!(violations, 0);
    pass("successor and ShortLex monotonicity on 10,000 random samples");
}

/// Criterion 7: ordinal ranks on three strands: exact values on half-twist
/// powers and order-isomorphism with the braid order on all words of length
/// <= 8.
#[test]
fn three_strand_ordinal_ranks() {
    for d in 1..=4u32 {
        let x = delta(3).unwrap().pow(d);
        let rank = ordering::rank_b3(&x).unwrap();
        let expect = OrdinalCnf::from_terms([(d + 1, 1), (0, d as u64)]).unwrap();
        assert_eq!(rank, expect, "rank of the half-twist power {d}");
    }
    let words = oracle::all_words(3, 0..=8);
    let ranks: Vec<OrdinalCnf> = words
        .iter()
        .map(|x| ordering::rank_b3(x).unwrap())
        .collect();
    let mut violations = 0usize;
    for i in 0..words.len() {
        for j in 0..words.len() {
            let by_order = ordering::compare_plus(&words[i], &words[j]).unwrap();
            let by_rank = ordering::ordinal_compare(&ranks[i], &ranks[j]);
            if by_order != by_rank {
                violations += 1;
            }
        }
    }
    assert_eq!(violations, 0);
    pass("ordinal ranks: exact half-twist values and order isomorphism (B3 len<=8)");
}

/// Criterion 8: the zigzag identities: the power identity, the splitting
/// shape, and the least-upper-bound property of the breadth filtration.
#[test]
fn delta_hat_identities() {
    // Word-level power identity, via equivalence.
    for n in 2..=5u16 {
        for d in 1..=4u32 {
            let lhs = delta(n).unwrap().pow(d);
            let rhs = delta_hat(n, d)
                .unwrap()
                .concat(
                    &delta(n - 1)
                        .map(|w| w.pow(d))
                        .unwrap_or_else(|_| PositiveBraidWord::empty(n).unwrap())
                        .with_strands(n)
                        .unwrap(),
                )
                .unwrap();
            assert!(
                garside::equivalent(&lhs, &rhs),
                "power identity at n={n}, d={d}"
            );
        }
    }
    // Splitting shape of the zigzag itself.
    for n in 3..=5u16 {
        for d in 1..=4u32 {
            let s = splitting::braid_splitting(&delta_hat(n, d).unwrap(), n).unwrap();
            assert_eq!(s.breadth(), d as usize + 2);
            let run = delta_small(n - 1).unwrap();
            let run_one = run.concat(&w(n - 1, "1")).unwrap();
            assert!(garside::equivalent(&s.entries()[0], &w(n - 1, "1")));
            for mid in &s.entries()[1..d as usize] {
                assert!(garside::equivalent(mid, &run_one));
            }
            assert!(garside::equivalent(&s.entries()[d as usize], &run));
            assert!(s.entries()[d as usize + 1].is_empty());
        }
    }
    // Least upper bound of the breadth filtration, exhaustively on B4 words
    // of length <= 6.
    let words = oracle::all_words(4, 0..=6);
    for p in 2..=5usize {
        let bound = ordering::least_upper_bound_witness(4, p).unwrap();
        assert_eq!(splitting::breadth(&bound, 4).unwrap(), p + 1);
        for x in &words {
            let b = splitting::breadth(x, 4).unwrap();
            let cmp = ordering::compare_plus(x, &bound).unwrap();
            if b <= p {
                assert_eq!(cmp, Ordering::Less, "{x} with breadth {b} vs bound p={p}");
            } else {
                assert_ne!(cmp, Ordering::Less, "{x} with breadth {b} vs bound p={p}");
            }
        }
    }
    pass("zigzag identities: power identity, splitting shape, breadth bounds");
}

/// Criterion 9: on three strands the exponent-floor test recognises normal
/// words exactly (all words of length <= 10), and every admissible profile
/// with total exponent <= 8 is realised by an actual splitting.
#[test]
fn three_strand_characterization() {
    for word in oracle::all_words(3, 0..=10) {
        let profile = phinormal::b3_exponent_profile(&word).unwrap();
        assert_eq!(
            phinormal::b3_normal_test(&profile),
            phinormal::is_phi_normal(&word).unwrap(),
            "closed form vs checker on {word}"
        );
    }

    // Enumerate admissible profiles (e_p, ..., e_1) with sum <= 8 and verify
    // each is the splitting profile of the braid it reconstructs.
    let mut realized = 0usize;
    let mut stack: Vec<Vec<u32>> = vec![Vec::new()];
    while let Some(profile) = stack.pop() {
        let total: u32 = profile.iter().sum();
        if !profile.is_empty() {
            let p = profile.len();
            let admissible = profile[0] >= 1
                && profile.iter().enumerate().skip(1).all(|(j, &e)| {
                    let r = p - j;
                    e >= phinormal::b3_min_exponent(r)
                })
                || p == 1;
            if admissible {
                // Build the alternating word for the profile and split it.
                let mut letters: Vec<u16> = Vec::new();
                for (j, &e) in profile.iter().enumerate() {
                    let r = p - j;
                    let g = if r % 2 == 1 { 1 } else { 2 };
                    letters.extend(std::iter::repeat_n(g, e as usize));
                }
                let word = PositiveBraidWord::from_indices(3, letters).unwrap();
                let s = splitting::braid_splitting(&word, 3).unwrap();
                let got: Vec<u32> = s.entries().iter().map(|e| e.len() as u32).collect();
                assert_eq!(got, profile, "profile not realised by its own word");
                realized += 1;
            }
        }
        // Extend the profile on the right (next deeper position).
        if profile.len() < 8 {
            for e in 0..=(8 - total) {
                let mut next = profile.clone();
                next.push(e);
                // Prune: positions left of the last must meet their floors
                // once further entries exist; handled on emission above.
                stack.push(next);
            }
        }
    }
    assert!(realized > 100, "realised only {realized} profiles");
    pass("three-strand normality characterization and splitting sufficiency");
}

/// Criterion 10: normalization scales quadratically in word length: the
/// fitted log-log slope over lengths 250..2000 lies in [1.6, 2.4] for both
/// four and six strands, and the longest six-strand case stays under ten
/// seconds.
#[test]
fn normalization_runtime_quadratic_fit() {
    fn measure_slope(n: u16) -> f64 {
        let lengths = [250usize, 500, 1000, 2000];
        let mut points: Vec<(f64, f64)> = Vec::new();
        for (k, &len) in lengths.iter().enumerate() {
            let mut best = f64::INFINITY;
            for sample in 0..3u64 {
                let seed = 0x1060_0000u64 ^ ((n as u64) << 16) ^ ((k as u64) << 8) ^ sample;
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let word =
                    PositiveBraidWord::from_indices(n, (0..len).map(|_| rng.gen_range(1..n)))
                        .unwrap();
                let started = Instant::now();
                let nf = phinormal::phi_normalize(&word).unwrap();
                let elapsed = started.elapsed().as_secs_f64();
                assert_eq!(nf.len(), word.len());
                best = best.min(elapsed);
                if n == 6 && len == 2000 {
                    assert!(
                        elapsed < 10.0,
                        "six-strand length-2000 case took {elapsed:.2}s"
                    );
                }
            }
            points.push(((len as f64).ln(), best.ln()));
        }
        let m = points.len() as f64;
        let sx: f64 = points.iter().map(|p| p.0).sum();
        let sy: f64 = points.iter().map(|p| p.1).sum();
        let sxx: f64 = points.iter().map(|p| p.0 * p.0).sum();
        let sxy: f64 = points.iter().map(|p| p.0 * p.1).sum();
        (m * sxy - sx * sy) / (m * sxx - sx * sx)
    }

    for n in [4u16, 6] {
        // Wall-clock fits are sensitive to sibling tests competing for
        // cores, so allow a few fresh measurements before judging.
        let mut slope = f64::NAN;
        for attempt in 1..=4 {
            slope = measure_slope(n);
            println!("  runtime fit over {n} strands (attempt {attempt}): slope {slope:.3}");
            if (1.6..=2.4).contains(&slope) {
                break;
            }
        }
        assert!(
            (1.6..=2.4).contains(&slope),
            "fitted slope {slope:.3} out of range for {n} strands"
        );
    }
    pass("normalization runtime fits a quadratic (slope in [1.6, 2.4], <10s absolute)");
}

/// Criterion 11: the published counterexamples behave as stated: the greedy
/// alternating decomposition is not shortest for the mixed covering, a
/// non-dense covering produces a gap, and density holds exactly where it
/// should.
#[test]
fn non_canonical_covering_counterexamples() {
    // Greedy alternating decomposition of length 5, although a valid
    // alternating sequence of length 4 exists for the same braid.
    let x = w(4, "3 2 1 2 3 3 2");
    let i1 = ParabolicIndexSet::new([1, 3]);
    let i2 = ParabolicIndexSet::new([2, 3]);
    let dec = covering::alternating_decomposition(&x, &i2, &i1).unwrap();
    assert_eq!(dec.len(), 5);
    // The maximal-tail entries, confirmed below against the defining
    // conditions by exhaustion: since σ1 σ2^2 σ3 σ1 = σ1 σ2^2 σ1 σ3 is
    // right-divisible by σ3, the σ3 must sit in the second entry.
    let expect = [w(4, "1"), w(4, "2 2"), w(4, "1"), w(4, "3 2"), w(4, "1")];
    for (got, want) in dec.iter().zip(expect.iter()) {
        assert!(garside::equivalent(got, want), "{got} vs {want}");
    }
    // Entries alternate between the index sets, non-final entries are
    // non-trivial, the product returns x, and every partial product is
    // orthogonal to the next set up (oracle-checked).
    let p = dec.len();
    let mut partial = PositiveBraidWord::empty(4).unwrap();
    for (j, entry) in dec.iter().enumerate() {
        let r = p - j;
        let set = if r % 2 == 1 { &i1 } else { &i2 };
        assert!(
            entry.lies_in(|i| set.contains(i)),
            "entry {r} escapes its submonoid"
        );
        if r >= 2 {
            assert!(!entry.is_empty());
        }
        partial = partial.concat(entry).unwrap();
    }
    assert!(garside::equivalent(&partial, &x));
    for r in 1..p {
        let mut head = PositiveBraidWord::empty(4).unwrap();
        for entry in &dec[..p - r] {
            head = head.concat(entry).unwrap();
        }
        let set = if r % 2 == 1 { &i1 } else { &i2 };
        for i in set.iter() {
            assert!(
                !oracle::oracle_right_divides(&head, Generator::new(i).unwrap(), None).unwrap(),
                "partial product above entry {r} is divisible by {i}"
            );
        }
    }
    // The length-4 sequence: alternation is respected and the product is x.
    let short = [w(4, "3 2"), w(4, "1"), w(4, "2 3 3 2"), w(4, "")];
    let p = short.len();
    for (j, entry) in short.iter().enumerate() {
        let r = p - j;
        let set = if r % 2 == 1 { &i1 } else { &i2 };
        assert!(
            entry.lies_in(|i| set.contains(i)),
            "entry {r} breaks alternation"
        );
    }
    let mut product = PositiveBraidWord::empty(4).unwrap();
    for entry in &short {
        product = product.concat(entry).unwrap();
    }
    assert!(garside::equivalent(&product, &x));

    // The non-dense covering on five strands has a gap witness, found by
    // search over short words.
    let gap_cov = CoveringTree::new(5, 2, vec![1, 2, 3, 4]).unwrap();
    let mut witness = None;
    'search: for word in oracle::all_words(5, 1..=2) {
        let (tree, _) = covering::iterated_decomposition(&word, &gap_cov).unwrap();
        let leaves = tree.leaves();
        for k in 1..leaves.len().saturating_sub(1) {
            if leaves[k].is_empty() && !leaves[k - 1].is_empty() && !leaves[k + 1].is_empty() {
                witness = Some((word.clone(), format!("{tree}")));
                break 'search;
            }
        }
    }
    let (word, shape) = witness.expect("a gap witness exists among short words");
    assert!(garside::equivalent(&word, &w(5, "4 1")));
    assert_eq!(shape, "((4,e),(1))");

    // Density: canonical coverings up to nine strands, and not the gap one.
    for n in 2..=9u16 {
        assert!(covering::base_sequence(n).unwrap().is_dense());
    }
    assert!(!gap_cov.is_dense());
    pass("counterexamples: non-shortest greedy sequence, gap witness, density frontier");
}

/// Criterion 12: divisibility, equivalence, and tails agree with the
/// exhaustive oracle on the full criterion-3 lattice.
#[test]
fn oracle_agreement_exhaustive() {
    let mut div_cases = 0usize;
    let mut eq_cases = 0usize;
    let mut tail_cases = 0usize;
    for (n, max) in [(3u16, 7usize), (4, 6)] {
        let words = oracle::all_words(n, 0..=max);
        let classes: Vec<oracle::EquivalenceClass> = words
            .iter()
            .map(|word| oracle::equivalence_class(word, None).unwrap())
            .collect();
        // Divisibility.
        for (word, class) in words.iter().zip(classes.iter()) {
            for i in 1..n {
                let fast = garside::right_divides(word, Generator::new(i).unwrap());
                let slow = class.iter().any(|m| m.letters().last() == Some(&i));
                assert_eq!(fast, slow, "divisibility of {word} by {i}");
                div_cases += 1;
            }
        }
        // Equivalence on all same-length pairs.
        for (u, class) in words.iter().zip(classes.iter()) {
            for v in &words {
                if u.len() != v.len() {
                    continue;
                }
                assert_eq!(
                    garside::equivalent(u, v),
                    class.contains(v),
                    "equivalence of {u} and {v}"
                );
                eq_cases += 1;
            }
        }
        // Tails: the defining decomposition property, which characterises
        // the maximal right divisor uniquely.
        let sets: Vec<ParabolicIndexSet> = (1..n)
            .map(|hi| ParabolicIndexSet::range(1, hi))
            .chain(std::iter::once(ParabolicIndexSet::range(
                2,
                n.saturating_sub(1).max(2),
            )))
            .collect();
        for (word, class) in words.iter().zip(classes.iter()) {
            for set in &sets {
                let (t, rest) = garside::tail(word, set);
                assert!(t.lies_in(|i| set.contains(i)));
                let back = rest.concat(&t).unwrap();
                assert!(
                    class.contains(&back),
                    "rest.tail does not reassemble {word}"
                );
                for i in set.iter() {
                    assert!(
                        !oracle::oracle_right_divides(&rest, Generator::new(i).unwrap(), None)
                            .unwrap(),
                        "rest {rest} still divisible by {i}"
                    );
                }
                tail_cases += 1;
            }
        }
    }
    println!("  oracle agreement: {div_cases} divisibility, {eq_cases} equality, {tail_cases} tail cases");
    pass("oracle agreement for divisibility, equivalence, and tails");
}
