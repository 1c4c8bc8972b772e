use serde::Serialize;

use super::word::{BraidLetter, BraidWord};
use crate::error::{Error, Result};

/// `β₁ = X σ_n^-1 Y σ_n` and `β₂ = X σ_n Y σ_n^-1` in `B_{n+1}` for `X, Y` in `B_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExchangePair {
    n: usize,
    x: BraidWord,
    y: BraidWord,
    beta1: BraidWord,
    beta2: BraidWord,
}

impl ExchangePair {
    pub fn new(x: &BraidWord, y: &BraidWord) -> Result<Self> {
        if x.n() != y.n() {
            return Err(Error::StrandMismatch(x.n(), y.n()));
        }
        let n = x.n();
        let build = |first: i8| {
            let mut letters = x.letters().to_vec();
            letters.push(BraidLetter::with_sign(n, first));
            letters.extend_from_slice(y.letters());
            letters.push(BraidLetter::with_sign(n, -first));
            BraidWord::from_parts_unchecked(n + 1, letters)
        };
        Ok(ExchangePair {
            n,
            x: x.clone(),
            y: y.clone(),
            beta1: build(-1),
            beta2: build(1),
        })
    }

    /// Braid index of `X` and `Y`; the pair lives in `B_{n+1}`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn x(&self) -> &BraidWord {
        &self.x
    }

    pub fn y(&self) -> &BraidWord {
        &self.y
    }

    pub fn beta1(&self) -> &BraidWord {
        &self.beta1
    }

    pub fn beta2(&self) -> &BraidWord {
        &self.beta2
    }

    /// `X σ_n Y σ_n`, whose two `σ_n` crossings carry the windings `m₁`, `m₂`.
    pub fn positive_form(&self) -> BraidWord {
        let mut letters = self.x.letters().to_vec();
        letters.push(BraidLetter::pos(self.n));
        letters.extend_from_slice(self.y.letters());
        letters.push(BraidLetter::pos(self.n));
        BraidWord::from_parts_unchecked(self.n + 1, letters)
    }

    /// 1-based positions of the two `σ_n` letters in the pair's words.
    pub fn exchange_positions(&self) -> (usize, usize) {
        (self.x.len() + 1, self.x.len() + self.y.len() + 2)
    }
}

pub fn exchange_pair(x: &BraidWord, y: &BraidWord) -> Result<ExchangePair> {
    ExchangePair::new(x, y)
}

/// Cases where an exchange pair is uninteresting before any invariant is computed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrivialityReport {
    /// `X` has no `σ_{n-1}`, so it commutes with `σ_n` and the pair is conjugate.
    pub x_avoids_top: bool,
    pub y_avoids_top: bool,
    /// Every maximal run of `σ_{n-1}^{±1}` in `X` and `Y` has even exponent sum,
    /// so the closure cannot be a knot.
    pub parity_obstruction: bool,
}

impl TrivialityReport {
    pub fn conjugate(&self) -> bool {
        self.x_avoids_top || self.y_avoids_top
    }

    pub fn any(&self) -> bool {
        self.conjugate() || self.parity_obstruction
    }
}

fn top_blocks(w: &BraidWord, top: usize) -> Vec<i64> {
    let mut blocks = Vec::new();
    let mut current: Option<i64> = None;
    for l in w.letters() {
        if l.index == top {
            let s = l.sign().map_or(1, i64::from);
            current = Some(current.unwrap_or(0) + s);
        } else if let Some(c) = current.take() {
            blocks.push(c);
        }
    }
    blocks.extend(current);
    blocks
}

pub fn triviality_filters(x: &BraidWord, y: &BraidWord) -> Result<TrivialityReport> {
    if x.n() != y.n() {
        return Err(Error::StrandMismatch(x.n(), y.n()));
    }
    let top = x.n() - 1;
    let avoids = |w: &BraidWord| top == 0 || w.letters().iter().all(|l| l.index != top);
    let parity = top > 0
        && top_blocks(x, top).into_iter().chain(top_blocks(y, top)).all(|b| b % 2 == 0);
    Ok(TrivialityReport { x_avoids_top: avoids(x), y_avoids_top: avoids(y), parity_obstruction: parity })
}
