//! Random search for exchange pairs on which `Q₁` and the Fiedler polynomial disagree.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::q_difference;
use crate::braid::{exchange_pair, triviality_filters, BraidLetter, BraidWord, ExchangePair};
use crate::error::{Error, Result};
use crate::fiedler::exchange_fiedler_difference;
use crate::permcalc::exchange_lengths_of;

pub const SCHEMA_VERSION: u32 = 1;

/// Redraws allowed per sample before it is reported as skipped.
const MAX_ATTEMPTS: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanConfig {
    /// Braid index of `X` and `Y`; the pairs live in `B_{n+1}`.
    pub n: usize,
    /// Combined length `|X| + |Y|`.
    pub length: usize,
    pub samples: usize,
    pub seed: u64,
    /// Pairs evaluated before the random samples.
    pub include: Vec<(BraidWord, BraidWord)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub schema: u32,
    pub index: usize,
    /// `"sample"` or `"include"`.
    pub source: String,
    #[serde(rename = "X")]
    pub x: String,
    #[serde(rename = "Y")]
    pub y: String,
    pub n: usize,
    pub fiedler_diff_zero: bool,
    pub q1_diff_zero: bool,
    pub l: usize,
    /// `2l = n + 2`, the cycle-length condition for the Fiedler difference to vanish.
    pub l_predicts_zero: bool,
    pub agree: bool,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub schema: u32,
    pub summary: bool,
    pub n: usize,
    pub length: usize,
    pub samples: usize,
    pub seed: u64,
    pub evaluated: usize,
    pub skipped: usize,
    pub agreements: usize,
    pub disagreements: usize,
    /// Records where exactly one of the two differences vanishes.
    pub counterexamples: Vec<ScanRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub records: Vec<ScanRecord>,
    pub summary: ScanSummary,
}

impl ScanReport {
    /// One JSON object per line, records first, summary last.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("serializable"));
            out.push('\n');
        }
        out.push_str(&serde_json::to_string(&self.summary).expect("serializable"));
        out.push('\n');
        out
    }
}

fn random_word(rng: &mut ChaCha8Rng, n: usize, len: usize) -> BraidWord {
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n);
            BraidLetter::with_sign(i, if rng.gen_bool(0.5) { 1 } else { -1 })
        })
        .collect();
    BraidWord::new(n, letters).expect("indices drawn in range")
}

fn draw_pair(cfg: &ScanConfig, index: usize) -> Option<ExchangePair> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index as u64);
    for _ in 0..MAX_ATTEMPTS {
        let lx = rng.gen_range(1..cfg.length);
        let x = random_word(&mut rng, cfg.n, lx);
        let y = random_word(&mut rng, cfg.n, cfg.length - lx);
        let filters = triviality_filters(&x, &y).ok()?;
        if filters.any() {
            continue;
        }
        let pair = exchange_pair(&x, &y).ok()?;
        if pair.beta1().is_knot() {
            return Some(pair);
        }
    }
    None
}

fn evaluate(pair: &ExchangePair, index: usize, source: &str, seed: u64) -> Result<ScanRecord> {
    let fiedler_zero = exchange_fiedler_difference(pair)?.is_zero();
    let q1_zero = q_difference(pair, 1)?.is_zero();
    let l = exchange_lengths_of(pair)?.l;
    Ok(ScanRecord {
        schema: SCHEMA_VERSION,
        index,
        source: source.to_string(),
        x: pair.x().letters_string(),
        y: pair.y().letters_string(),
        n: pair.n(),
        fiedler_diff_zero: fiedler_zero,
        q1_diff_zero: q1_zero,
        l,
        l_predicts_zero: 2 * l == pair.n() + 2,
        agree: fiedler_zero == q1_zero,
        seed,
    })
}

/// Samples exchange pairs and records whether the Fiedler and `Q₁` differences vanish together.
///
/// Each sample draws from its own ChaCha stream keyed by `(seed, index)`, so the output is
/// independent of scheduling.
pub fn conjecture_scan(cfg: &ScanConfig) -> Result<ScanReport> {
    if cfg.n < 2 {
        return Err(Error::BadParameter("scan needs n >= 2".into()));
    }
    if cfg.length < 2 {
        return Err(Error::BadParameter("scan needs length >= 2".into()));
    }
    let mut records = Vec::new();
    for (k, (x, y)) in cfg.include.iter().enumerate() {
        let pair = exchange_pair(x, y)?;
        records.push(evaluate(&pair, k, "include", cfg.seed)?);
    }
    let offset = records.len();
    let sampled: Vec<Option<ScanRecord>> = (0..cfg.samples)
        .into_par_iter()
        .map(|i| draw_pair(cfg, i).map(|p| evaluate(&p, offset + i, "sample", cfg.seed)).transpose())
        .collect::<Result<Vec<_>>>()?;
    let skipped = sampled.iter().filter(|r| r.is_none()).count();
    records.extend(sampled.into_iter().flatten());
    let agreements = records.iter().filter(|r| r.agree).count();
    let counterexamples: Vec<ScanRecord> = records.iter().filter(|r| !r.agree).cloned().collect();
    let summary = ScanSummary {
        schema: SCHEMA_VERSION,
        summary: true,
        n: cfg.n,
        length: cfg.length,
        samples: cfg.samples,
        seed: cfg.seed,
        evaluated: records.len(),
        skipped,
        agreements,
        disagreements: counterexamples.len(),
        counterexamples,
    };
    Ok(ScanReport { records, summary })
}
