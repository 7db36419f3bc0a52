//! Command-line surface: normalize, split, decompose, compare, sign, rank,
//! walk, verify.
//!
//! Words are whitespace- or comma-separated signed integers (`2` for the
//! second generator, `-2` for its inverse). Exit codes: 0 success, 2 usage
//! or malformed input, 3 internal invariant breach, 4 oracle bound
//! exceeded.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use phinorm::covering::{self, CoveringTree};
use phinorm::error::Error;
use phinorm::ordering;
use phinorm::phinormal;
use phinorm::splitting;
use phinorm::verify;
use phinorm::walk::{self, WalkConfig};
use phinorm::word::{self, PositiveBraidWord};

const FORMAT_HELP: &str = "\
Word format: whitespace- or comma-separated signed decimal integers; `i` is \
the i-th Artin generator and `-i` its inverse. The strand count is inferred \
as 1 + max |i| unless --strands is given. The empty string is the trivial \
braid.

Exit codes: 0 success, 2 usage or malformed input, 3 internal invariant \
breach, 4 oracle bound exceeded.";

#[derive(Parser)]
#[command(
    name = "phinorm",
    version,
    about = "Alternating normal forms and the braid ordering",
    after_long_help = FORMAT_HELP,
    after_help = FORMAT_HELP
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct WordArgs {
    /// Number of strands; inferred from the letters when omitted.
    #[arg(long)]
    strands: Option<u16>,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the normal form of a positive word.
    Normalize {
        #[command(flatten)]
        common: WordArgs,
        /// Emit the per-letter division trace as CSV.
        #[arg(long)]
        trace: bool,
        /// The input word.
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Compute the splitting of a positive braid.
    Split {
        #[command(flatten)]
        common: WordArgs,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Compute the iterated decomposition along a covering.
    Decompose {
        #[command(flatten)]
        common: WordArgs,
        /// JSON file with a covering skeleton (nested 2-arrays of
        /// generators); defaults to the canonical one.
        #[arg(long)]
        covering: Option<std::path::PathBuf>,
        /// Emit the extraction trace as CSV.
        #[arg(long)]
        trace: bool,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Compare two positive braids in the canonical well-ordering.
    Compare {
        #[command(flatten)]
        common: WordArgs,
        #[arg(allow_hyphen_values = true)]
        word1: String,
        #[arg(allow_hyphen_values = true)]
        word2: String,
    },
    /// Decide whether a signed word is below, equal to, or above the
    /// identity.
    Sign {
        #[command(flatten)]
        common: WordArgs,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// The ordinal rank of a 3-strand positive braid.
    Rank {
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Random-walk statistics of breadth and entry lengths.
    Walk {
        #[arg(long)]
        strands: u16,
        #[arg(long)]
        steps: usize,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Multiply new generators on the left (the default).
        #[arg(long, conflicts_with = "right")]
        left: bool,
        /// Multiply new generators on the right instead of the left.
        #[arg(long)]
        right: bool,
        /// Number of evenly spaced checkpoints.
        #[arg(long, default_value_t = 10)]
        checkpoints: usize,
        /// Track entry lengths c_0 .. c_R.
        #[arg(long, default_value_t = 3)]
        entries: usize,
        /// Emit the time series as CSV.
        #[arg(long)]
        csv: bool,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Run the cross-module oracle suite.
    Verify {
        #[arg(long, default_value = "quick")]
        level: verify::Level,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    // Die quietly on a closed pipe instead of panicking mid-print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Invariant(_) => 3,
        Error::BoundExceeded(_) => 4,
        _ => 2,
    }
}

fn parse_positive(text: &str, strands: Option<u16>) -> Result<PositiveBraidWord, Error> {
    word::parse_positive(text, strands)
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Normalize {
            common,
            trace,
            word,
        } => {
            let w = parse_positive(&word, common.strands)?;
            if trace {
                let (nf, steps) = phinormal::phi_normalize_traced(&w)?;
                if common.json {
                    let steps_json: Vec<_> = steps.iter().map(normalize_step_json).collect();
                    println!(
                        "{}",
                        json!({
                            "input": w.to_string(),
                            "strands": w.strands(),
                            "normal": nf.to_string(),
                            "trace": steps_json,
                        })
                    );
                } else {
                    print!("{}", normalize_trace_csv(&steps));
                }
            } else {
                let nf = phinormal::phi_normalize(&w)?;
                if common.json {
                    println!(
                        "{}",
                        json!({
                            "input": w.to_string(),
                            "strands": w.strands(),
                            "normal": nf.to_string(),
                        })
                    );
                } else {
                    println!("{nf}");
                }
            }
        }
        Command::Split { common, word } => {
            let w = parse_positive(&word, common.strands)?;
            let s = splitting::braid_splitting(&w, w.strands())?;
            if common.json {
                let entries: Vec<String> = s.entries().iter().map(|e| e.to_string()).collect();
                println!(
                    "{}",
                    json!({
                        "strands": s.strands(),
                        "breadth": s.breadth(),
                        "entries": entries,
                    })
                );
            } else {
                println!("{s}");
            }
        }
        Command::Decompose {
            common,
            covering: covering_file,
            trace,
            word,
        } => {
            let w = parse_positive(&word, common.strands)?;
            let cov = match covering_file {
                Some(path) => {
                    let text = std::fs::read_to_string(&path).map_err(|e| {
                        Error::Domain(format!("cannot read {}: {e}", path.display()))
                    })?;
                    let value: serde_json::Value = serde_json::from_str(&text)
                        .map_err(|e| Error::Domain(format!("covering JSON: {e}")))?;
                    CoveringTree::from_json(w.strands(), &value)?
                }
                None => covering::base_sequence(w.strands())?,
            };
            let (tree, steps) = covering::iterated_decomposition(&w, &cov)?;
            if common.json {
                let trace_json: Vec<_> = steps
                    .iter()
                    .map(|s| {
                        json!({
                            "r": s.r,
                            "address": s.address.to_string(),
                            "address_binary": s.binary.to_string(),
                            "extracted": s.extracted.to_string(),
                            "remainder": s.remainder.to_string(),
                        })
                    })
                    .collect();
                let mut obj = json!({
                    "strands": w.strands(),
                    "tree": tree.to_json(),
                });
                if trace {
                    obj["trace"] = json!(trace_json);
                }
                println!("{obj}");
            } else if trace {
                print!("{}", decompose_trace_csv(&steps));
            } else {
                println!("{tree}");
            }
        }
        Command::Compare {
            common,
            word1,
            word2,
        } => {
            let (u, v) = match common.strands {
                Some(n) => (
                    parse_positive(&word1, Some(n))?,
                    parse_positive(&word2, Some(n))?,
                ),
                None => {
                    let a = parse_positive(&word1, None)?;
                    let b = parse_positive(&word2, None)?;
                    let n = a.strands().max(b.strands());
                    (a.with_strands(n)?, b.with_strands(n)?)
                }
            };
            let verdict = ordering::compare_plus_checked(&u, &v)?;
            let symbol = match verdict {
                std::cmp::Ordering::Less => "<",
                std::cmp::Ordering::Equal => "=",
                std::cmp::Ordering::Greater => ">",
            };
            if common.json {
                let su = splitting::braid_splitting(&u, u.strands())?;
                let sv = splitting::braid_splitting(&v, v.strands())?;
                let tu = splitting::exponent_sequence(&splitting::braid_decomposition(&u)?);
                let tv = splitting::exponent_sequence(&splitting::braid_decomposition(&v)?);
                println!(
                    "{}",
                    json!({
                        "verdict": symbol,
                        "breadths": [su.breadth(), sv.breadth()],
                        "exponent_trees": [tu.to_json(), tv.to_json()],
                    })
                );
            } else {
                println!("{symbol}");
            }
        }
        Command::Sign { common, word } => {
            let sw = word::parse(&word, common.strands)?;
            let s = ordering::sign(&sw)?;
            if common.json {
                println!("{}", json!({ "sign": s.to_string() }));
            } else {
                println!("{s}");
            }
        }
        Command::Rank {
            json: as_json,
            word,
        } => {
            let w = parse_positive(&word, Some(3))?;
            let rank = ordering::rank_b3(&w)?;
            if as_json {
                let nf = phinormal::phi_normalize(&w)?;
                let profile = phinormal::b3_exponent_profile(&nf)?;
                println!(
                    "{}",
                    json!({
                        "rank": ordering::ordinal_format(&rank),
                        "normal": nf.to_string(),
                        "profile": profile,
                    })
                );
            } else {
                println!("{}", ordering::ordinal_format(&rank));
            }
        }
        Command::Walk {
            strands,
            steps,
            trials,
            seed,
            left: _,
            right,
            checkpoints,
            entries,
            csv,
            json: as_json,
        } => {
            let cfg = WalkConfig {
                strands,
                steps,
                trials,
                seed,
                left: !right,
                checkpoints,
                max_entry: entries,
            };
            let report = walk::run(&cfg)?;
            if as_json {
                println!(
                    "{}",
                    serde_json::to_string(&report).expect("report serializes")
                );
            } else if csv {
                print!("{}", report.to_csv());
            } else {
                println!(
                    "walk on {} strands: {} steps, {} trials, seed {} ({} multiplication)",
                    strands,
                    steps,
                    trials,
                    seed,
                    if right { "right" } else { "left" }
                );
                for row in &report.rows {
                    let entries_text: Vec<String> = row
                        .entry_lengths
                        .iter()
                        .enumerate()
                        .map(|(r, s)| format!("|c{r}|={:.2}", s.mean))
                        .collect();
                    println!(
                        "  k={:>8}  breadth mean {:.3} (var {:.3})  {}",
                        row.step,
                        row.breadth.mean,
                        row.breadth.variance,
                        entries_text.join("  ")
                    );
                }
            }
        }
        Command::Verify {
            level,
            json: as_json,
        } => {
            let report = verify::run(level)?;
            if as_json {
                println!(
                    "{}",
                    serde_json::to_string(&report).expect("report serializes")
                );
            } else {
                for c in &report.checks {
                    println!(
                        "{} {} (cases={}, mismatches={})",
                        if c.passed { "ok  " } else { "FAIL" },
                        c.name,
                        c.cases,
                        c.mismatches
                    );
                }
                println!(
                    "{}",
                    if report.passed {
                        "all checks passed"
                    } else {
                        "CHECKS FAILED"
                    }
                );
            }
            if !report.passed {
                return Ok(ExitCode::from(3));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn normalize_step_json(s: &covering::NormalizeStep) -> serde_json::Value {
    json!({
        "k": s.k,
        "word": s.word.to_string(),
        "normal_prefix": s.normal_prefix.to_string(),
        "address_before": s.address_before.to_string(),
        "trials": s.trials.iter().map(|t| json!({
            "m": t.m,
            "address": t.address.to_string(),
            "generator": t.generator,
            "divides": t.divides,
        })).collect::<Vec<_>>(),
    })
}

fn normalize_trace_csv(steps: &[covering::NormalizeStep]) -> String {
    let mut out = String::from("k,word,normal_prefix,address_before,m,address,generator,divides\n");
    for s in steps {
        if s.trials.is_empty() {
            out.push_str(&format!(
                "{},{},{},{},,,,\n",
                s.k, s.word, s.normal_prefix, s.address_before
            ));
        }
        for t in &s.trials {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                s.k,
                s.word,
                s.normal_prefix,
                s.address_before,
                t.m,
                t.address,
                t.generator,
                if t.divides { "yes" } else { "no" }
            ));
        }
    }
    out
}

fn decompose_trace_csv(steps: &[covering::DecompositionStep]) -> String {
    let mut out = String::from("r,remainder,address,address_binary,extracted\n");
    for s in steps {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            s.r, s.remainder, s.address, s.binary, s.extracted
        ));
    }
    out
}
