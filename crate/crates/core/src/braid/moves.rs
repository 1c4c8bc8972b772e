//! Closure-preserving rewrites of braid words.
//!
//! Positions are 1-based throughout, matching the way crossings are counted along a word.

use serde::Serialize;

use super::word::{BraidLetter, BraidWord};
use crate::error::{Error, Result};

/// Moves the first `k` letters to the end (conjugation by a prefix).
pub fn cyclic_rotate(w: &BraidWord, k: usize) -> BraidWord {
    let mut letters = w.letters().to_vec();
    if !letters.is_empty() {
        let k = k % letters.len();
        letters.rotate_left(k);
    }
    BraidWord::from_parts_unchecked(w.n(), letters)
}

/// `g w g^-1`. `g` must be non-singular and fit in `B_n`.
pub fn conjugate(w: &BraidWord, g: &BraidWord) -> Result<BraidWord> {
    if g.n() > w.n() {
        return Err(Error::StrandMismatch(w.n(), g.n()));
    }
    let ginv = g.inverse()?;
    let mut letters = g.letters().to_vec();
    letters.extend_from_slice(w.letters());
    letters.extend_from_slice(ginv.letters());
    Ok(BraidWord::from_parts_unchecked(w.n(), letters))
}

/// Cancels adjacent `σ_i σ_i^-1` pairs until none remain (not cyclically).
pub fn free_reduce(w: &BraidWord) -> BraidWord {
    let mut out: Vec<BraidLetter> = Vec::with_capacity(w.len());
    for &l in w.letters() {
        match out.last() {
            Some(prev) if !l.is_singular() && prev.inverse() == Some(l) => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    BraidWord::from_parts_unchecked(w.n(), out)
}

/// Free reduction of the closure: also cancels pairs that meet across the end of the word.
pub fn cyclic_free_reduce(w: &BraidWord) -> BraidWord {
    let mut letters = free_reduce(w).letters().to_vec();
    while letters.len() >= 2 {
        let (first, last) = (letters[0], letters[letters.len() - 1]);
        if !first.is_singular() && first.inverse() == Some(last) {
            letters.pop();
            letters.remove(0);
        } else {
            break;
        }
    }
    BraidWord::from_parts_unchecked(w.n(), letters)
}

fn mixed_relation_allowed(x: i8, y: i8, z: i8) -> bool {
    // σ_i^x σ_j^y σ_i^z = σ_j^z σ_i^y σ_j^x holds except for the two sign patterns
    // that would swap a crossing through an oppositely signed middle letter.
    !(x == z && y == -x)
}

/// Applies one braid relation starting at `position`.
///
/// Far-apart letters at `position`, `position+1` are swapped. Adjacent indices
/// `σ_i^x σ_j^y σ_i^z` (|i-j| = 1) become `σ_j^z σ_i^y σ_j^x`, which covers the
/// positive relation and all of its valid mixed-sign variants.
pub fn apply_braid_relation(w: &BraidWord, position: usize) -> Result<BraidWord> {
    let len = w.len();
    if position == 0 || position + 1 > len {
        return Err(Error::PositionOutOfRange { pos: position, len });
    }
    let p = position - 1;
    let letters = w.letters();
    let (u, v) = (letters[p], letters[p + 1]);
    let mut out = letters.to_vec();
    if u.index.abs_diff(v.index) >= 2 {
        out.swap(p, p + 1);
        return Ok(BraidWord::from_parts_unchecked(w.n(), out));
    }
    if p + 2 >= len {
        return Err(Error::PatternNotPresent(format!("no relation at position {position}")));
    }
    let t = letters[p + 2];
    if u.index.abs_diff(v.index) != 1 || t.index != u.index {
        return Err(Error::PatternNotPresent(format!(
            "letters {u} {v} {t} at position {position} form no relation"
        )));
    }
    let (Some(x), Some(y), Some(z)) = (u.sign(), v.sign(), t.sign()) else {
        return Err(Error::PatternNotPresent("braid relation across a singular letter".into()));
    };
    if !mixed_relation_allowed(x, y, z) {
        return Err(Error::PatternNotPresent(format!("{u} {v} {t} is not a braid relation")));
    }
    out[p] = BraidLetter::with_sign(v.index, z);
    out[p + 1] = BraidLetter::with_sign(u.index, y);
    out[p + 2] = BraidLetter::with_sign(v.index, x);
    Ok(BraidWord::from_parts_unchecked(w.n(), out))
}

/// `w σ_n^sign` in `B_{n+1}`.
pub fn stabilize(w: &BraidWord, sign: i8) -> BraidWord {
    let mut letters = w.letters().to_vec();
    letters.push(BraidLetter::with_sign(w.n(), sign));
    BraidWord::from_parts_unchecked(w.n() + 1, letters)
}

/// Inverse of [`stabilize`]: the last letter must be the only `σ_{n-1}^{±1}` in the word.
pub fn destabilize(w: &BraidWord) -> Result<BraidWord> {
    let n = w.n();
    if n < 2 {
        return Err(Error::PatternNotPresent("cannot destabilize B_1".into()));
    }
    let top = n - 1;
    let Some(last) = w.letters().last() else {
        return Err(Error::PatternNotPresent("empty word has no σ_{n-1} to remove".into()));
    };
    if last.index != top || last.is_singular() {
        return Err(Error::PatternNotPresent(format!("last letter {last} is not σ_{top}^±1")));
    }
    let body = &w.letters()[..w.len() - 1];
    if body.iter().any(|l| l.index == top) {
        return Err(Error::PatternNotPresent(format!("σ_{top} occurs more than once")));
    }
    Ok(BraidWord::from_parts_unchecked(top, body.to_vec()))
}

/// Exchange move on the outermost generator `index` (1 or n-1).
///
/// The word must contain exactly two letters with that index, of opposite signs;
/// up to rotation it reads `X σ^-1 Y σ` and becomes `X σ Y σ^-1`.
pub fn exchange_move(w: &BraidWord, index: usize) -> Result<BraidWord> {
    let n = w.n();
    if n < 3 || (index != 1 && index != n - 1) {
        return Err(Error::PatternNotPresent(format!("σ_{index} is not an outer generator of B_{n}")));
    }
    let hits: Vec<usize> = w
        .letters()
        .iter()
        .enumerate()
        .filter(|(_, l)| l.index == index)
        .map(|(k, _)| k)
        .collect();
    if hits.len() != 2 {
        return Err(Error::PatternNotPresent(format!(
            "exchange needs exactly two σ_{index} letters, found {}",
            hits.len()
        )));
    }
    let (a, b) = (w.letters()[hits[0]], w.letters()[hits[1]]);
    match (a.sign(), b.sign()) {
        (Some(s), Some(t)) if s == -t => {}
        _ => {
            return Err(Error::PatternNotPresent(format!("σ_{index} letters {a}, {b} are not opposite")))
        }
    }
    let mut out = w.letters().to_vec();
    for k in hits {
        out[k] = out[k].inverse().expect("non-singular");
    }
    Ok(BraidWord::from_parts_unchecked(n, out))
}

/// A single primitive move, as used by scripted replays.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "move", rename_all = "snake_case")]
pub enum Move {
    Rotate { k: usize },
    Conjugate { by: Vec<i64> },
    FreeReduce,
    CyclicFreeReduce,
    Relation { position: usize },
    Stabilize { sign: i8 },
    Destabilize,
    Exchange { index: usize },
}

impl Move {
    pub fn name(&self) -> &'static str {
        match self {
            Move::Rotate { .. } => "rotate",
            Move::Conjugate { .. } => "conjugate",
            Move::FreeReduce => "free_reduce",
            Move::CyclicFreeReduce => "cyclic_free_reduce",
            Move::Relation { .. } => "relation",
            Move::Stabilize { .. } => "stabilize",
            Move::Destabilize => "destabilize",
            Move::Exchange { .. } => "exchange",
        }
    }
}

pub fn apply_move(w: &BraidWord, m: &Move) -> Result<BraidWord> {
    match m {
        Move::Rotate { k } => Ok(cyclic_rotate(w, *k)),
        Move::Conjugate { by } => conjugate(w, &BraidWord::from_ints(w.n(), by)?),
        Move::FreeReduce => Ok(free_reduce(w)),
        Move::CyclicFreeReduce => Ok(cyclic_free_reduce(w)),
        Move::Relation { position } => apply_braid_relation(w, *position),
        Move::Stabilize { sign } => Ok(stabilize(w, *sign)),
        Move::Destabilize => destabilize(w),
        Move::Exchange { index } => exchange_move(w, *index),
    }
}
