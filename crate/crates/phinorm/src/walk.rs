//! Random-walk statistics over the positive braid monoid.
//!
//! The walk multiplies a uniformly random generator onto the current braid,
//! on the left by default (`X_{k+1} = σ_i X_k`). At evenly spaced
//! checkpoints the splitting of the current word is computed and the breadth
//! and the entry lengths `|c_r|` (counted from the right, `c_0` rightmost)
//! are recorded across trials. The observed growth rates are reported, never
//! asserted: they are exploratory.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::splitting;
use crate::word::PositiveBraidWord;

/// Parameters of a walk experiment.
#[derive(Debug, Clone, Serialize)]
pub struct WalkConfig {
    pub strands: u16,
    pub steps: usize,
    pub trials: usize,
    pub seed: u64,
    /// Multiply new generators on the left (the default) or on the right.
    pub left: bool,
    /// Number of evenly spaced checkpoints (the final step is always one).
    pub checkpoints: usize,
    /// Track `|c_r|` for `r = 0..=max_entry`.
    pub max_entry: usize,
}

impl WalkConfig {
    pub fn new(strands: u16, steps: usize, trials: usize, seed: u64) -> WalkConfig {
        WalkConfig {
            strands,
            steps,
            trials,
            seed,
            left: true,
            checkpoints: 10,
            max_entry: 3,
        }
    }

    fn checkpoint_steps(&self) -> Vec<usize> {
        let c = self.checkpoints.max(1).min(self.steps.max(1));
        let mut out: Vec<usize> = (1..=c)
            .map(|j| (self.steps * j).div_ceil(c))
            .filter(|&k| k >= 1)
            .collect();
        out.dedup();
        out
    }
}

/// Mean and unbiased sample variance of a set of observations.
#[derive(Debug, Clone, Copy, Serialize, PartialEq)]
pub struct Stat {
    pub mean: f64,
    pub variance: f64,
}

fn stat_of(values: &[f64]) -> Stat {
    let n = values.len();
    let mean = values.iter().sum::<f64>() / n as f64;
    let variance = if n > 1 {
        values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1) as f64
    } else {
        0.0
    };
    Stat { mean, variance }
}

/// Statistics at one checkpoint, aggregated across trials.
#[derive(Debug, Clone, Serialize)]
pub struct CheckpointRow {
    pub step: usize,
    pub breadth: Stat,
    /// `entry_lengths[r]` is the statistic of `|c_r|`; missing entries count
    /// as zero length.
    pub entry_lengths: Vec<Stat>,
}

/// The full report of a walk experiment.
#[derive(Debug, Clone, Serialize)]
pub struct WalkReport {
    pub config: WalkConfig,
    pub rows: Vec<CheckpointRow>,
}

impl WalkReport {
    /// CSV with one row per checkpoint.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str("step,breadth_mean,breadth_var");
        for r in 0..=self.config.max_entry {
            out.push_str(&format!(",c{r}_len_mean,c{r}_len_var"));
        }
        out.push('\n');
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{}",
                row.step,
                format_f64(row.breadth.mean),
                format_f64(row.breadth.variance)
            ));
            for s in &row.entry_lengths {
                out.push_str(&format!(
                    ",{},{}",
                    format_f64(s.mean),
                    format_f64(s.variance)
                ));
            }
            out.push('\n');
        }
        out
    }
}

fn format_f64(v: f64) -> String {
    // Stable, locale-free rendering for reproducible output.
    format!("{v:.6}")
}

/// Per-trial observations at each checkpoint: breadth then entry lengths.
fn run_trial(
    cfg: &WalkConfig,
    trial: usize,
    checkpoints: &[usize],
) -> Result<Vec<(f64, Vec<f64>)>> {
    let n = cfg.strands;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(trial as u64 + 1);
    let mut letters: std::collections::VecDeque<u16> = std::collections::VecDeque::new();
    let mut out = Vec::with_capacity(checkpoints.len());
    let mut next = 0usize;
    for k in 1..=cfg.steps {
        let i = rng.gen_range(1..n);
        if cfg.left {
            letters.push_front(i);
        } else {
            letters.push_back(i);
        }
        if next < checkpoints.len() && checkpoints[next] == k {
            let word = PositiveBraidWord::from_indices(n, letters.iter().copied())?;
            let profile = splitting::breadth_profile(&word, n)?;
            let p = profile.len();
            let lens: Vec<f64> = (0..=cfg.max_entry)
                .map(|r| {
                    if r < p {
                        profile[p - 1 - r] as f64
                    } else {
                        0.0
                    }
                })
                .collect();
            out.push((p as f64, lens));
            next += 1;
        }
    }
    Ok(out)
}

/// Runs the experiment. Trials execute in parallel on independent RNG
/// streams; aggregation order is fixed, so the report is reproducible.
pub fn run(cfg: &WalkConfig) -> Result<WalkReport> {
    if cfg.strands < 3 {
        return Err(Error::Domain("walk statistics need n >= 3".into()));
    }
    if cfg.trials == 0 || cfg.steps == 0 {
        return Err(Error::Domain(
            "walk needs at least one trial and one step".into(),
        ));
    }
    let checkpoints = cfg.checkpoint_steps();
    let trials: Vec<Vec<(f64, Vec<f64>)>> = (0..cfg.trials)
        .into_par_iter()
        .map(|t| run_trial(cfg, t, &checkpoints))
        .collect::<Result<_>>()?;
    let mut rows = Vec::with_capacity(checkpoints.len());
    for (ci, &step) in checkpoints.iter().enumerate() {
        let breadths: Vec<f64> = trials.iter().map(|t| t[ci].0).collect();
        let entry_lengths: Vec<Stat> = (0..=cfg.max_entry)
            .map(|r| {
                let vals: Vec<f64> = trials.iter().map(|t| t[ci].1[r]).collect();
                stat_of(&vals)
            })
            .collect();
        rows.push(CheckpointRow {
            step,
            breadth: stat_of(&breadths),
            entry_lengths,
        });
    }
    Ok(WalkReport {
        config: cfg.clone(),
        rows,
    })
}
