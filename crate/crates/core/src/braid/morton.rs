//! Scripted unknotting of Morton's four-strand unknot with a single exchange move.

use serde::Serialize;
use thiserror::Error;

use super::moves::{apply_move, Move};
use super::word::BraidWord;
use crate::error::Error;

/// One line of a replay script: primitive moves and the word they must produce.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReplayStep {
    pub label: String,
    pub moves: Vec<Move>,
    pub expected: BraidWord,
}

impl ReplayStep {
    pub fn new(label: &str, moves: Vec<Move>, n: usize, expected: &[i64]) -> Self {
        ReplayStep {
            label: label.to_string(),
            moves,
            expected: BraidWord::from_ints(n, expected).expect("script words are valid"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepLog {
    pub step: usize,
    pub label: String,
    pub moves: Vec<Move>,
    pub word: BraidWord,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("step {step}: illegal move {name}: {source}")]
    IllegalMove { step: usize, name: &'static str, source: Error },
    #[error("step {step}: reached `{got}`, script expects `{expected}`")]
    Mismatch { step: usize, got: String, expected: String },
}

impl ReplayError {
    pub fn step(&self) -> usize {
        match self {
            ReplayError::IllegalMove { step, .. } | ReplayError::Mismatch { step, .. } => *step,
        }
    }
}

/// Runs `script` from `start`, checking every move and every intermediate word.
pub fn replay(start: &BraidWord, script: &[ReplayStep]) -> Result<Vec<StepLog>, ReplayError> {
    let mut word = start.clone();
    let mut log = Vec::with_capacity(script.len());
    for (k, step) in script.iter().enumerate() {
        let idx = k + 1;
        for m in &step.moves {
            word = apply_move(&word, m)
                .map_err(|source| ReplayError::IllegalMove { step: idx, name: m.name(), source })?;
        }
        if word != step.expected {
            return Err(ReplayError::Mismatch {
                step: idx,
                got: word.to_string(),
                expected: step.expected.to_string(),
            });
        }
        log.push(StepLog { step: idx, label: step.label.clone(), moves: step.moves.clone(), word: word.clone() });
    }
    Ok(log)
}

/// `σ₂³σ₁⁻¹σ₂σ₃⁻¹σ₂⁻²σ₁σ₂⁻¹σ₃` in `B₄`.
pub fn morton_start() -> BraidWord {
    BraidWord::from_ints(4, &[2, 2, 2, -1, 2, -3, -2, -2, 1, -2, 3]).expect("valid")
}

/// The conjugate exchange pair `X σ₁^∓1 Y σ₁^±1` with `X = σ₂⁻¹σ₃σ₂³`, `Y = σ₂σ₃⁻¹σ₂⁻²`.
pub fn morton_pair() -> (BraidWord, BraidWord) {
    (
        BraidWord::from_ints(4, &[-2, 3, 2, 2, 2, -1, 2, -3, -2, -2, 1]).expect("valid"),
        BraidWord::from_ints(4, &[-2, 3, 2, 2, 2, 1, 2, -3, -2, -2, -1]).expect("valid"),
    )
}

/// One line per arrow of the published move table.
pub fn morton_script() -> Vec<ReplayStep> {
    use Move::*;
    let rel = |p: usize| Relation { position: p };
    vec![
        ReplayStep::new("exchange", vec![Exchange { index: 1 }], 4, &[2, 2, 2, 1, 2, -3, -2, -2, -1, -2, 3]),
        ReplayStep::new("relation", vec![rel(8)], 4, &[2, 2, 2, 1, 2, -3, -2, -1, -2, -1, 3]),
        ReplayStep::new("relation", vec![rel(7)], 4, &[2, 2, 2, 1, 2, -3, -1, -2, -1, -1, 3]),
        ReplayStep::new("relations", vec![rel(6), rel(10), rel(9)], 4, &[2, 2, 2, 1, 2, -1, -3, -2, 3, -1, -1]),
        ReplayStep::new("conjugation", vec![Rotate { k: 9 }, rel(9)], 4, &[-1, -1, 2, 2, 2, 1, 2, -1, 2, -3, -2]),
        ReplayStep::new("conjugation", vec![Rotate { k: 10 }], 4, &[-2, -1, -1, 2, 2, 2, 1, 2, -1, 2, -3]),
        ReplayStep::new("destabilization", vec![Destabilize], 3, &[-2, -1, -1, 2, 2, 2, 1, 2, -1, 2]),
        ReplayStep::new("conjugation", vec![Rotate { k: 1 }, FreeReduce], 3, &[-1, -1, 2, 2, 2, 1, 2, -1]),
        ReplayStep::new("relation", vec![rel(5)], 3, &[-1, -1, 2, 2, 1, 2, 1, -1]),
        ReplayStep::new("free reduction", vec![FreeReduce], 3, &[-1, -1, 2, 2, 1, 2]),
        ReplayStep::new("relation", vec![rel(4)], 3, &[-1, -1, 2, 1, 2, 1]),
        ReplayStep::new("conjugation", vec![Rotate { k: 5 }, FreeReduce], 3, &[-1, 2, 1, 2]),
        ReplayStep::new("relation", vec![rel(2)], 3, &[-1, 1, 2, 1]),
        ReplayStep::new("conjugation", vec![FreeReduce, Rotate { k: 1 }], 3, &[1, 2]),
        ReplayStep::new("destabilization", vec![Destabilize, Destabilize], 1, &[]),
    ]
}

pub fn morton_replay() -> Result<Vec<StepLog>, ReplayError> {
    replay(&morton_start(), &morton_script())
}
