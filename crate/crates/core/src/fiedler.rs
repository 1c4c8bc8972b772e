//! The Fiedler polynomial of a braided knot and the identities it satisfies.

use serde::Serialize;

use crate::algebra::{symmetric_pair, LaurentPoly};
use crate::braid::{BraidLetter, BraidWord, ExchangePair};
use crate::error::{Error, Result};

/// Strand (counted at the top of the crossing) whose winding number is recorded when
/// the crossing is smoothed: `i+1` for `σ_i`, `i` for `σ_i^-1`.
pub fn ascending_index(letter: BraidLetter) -> Result<usize> {
    match letter.sign() {
        Some(1) => Ok(letter.index + 1),
        Some(_) => Ok(letter.index),
        None => Err(Error::SingularLetter),
    }
}

/// One smoothed crossing.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct SmoothingRecord {
    /// 1-based position of the crossing in the word.
    pub position: usize,
    pub ascending: usize,
    pub m: usize,
    pub sign: i8,
}

fn smoothed_winding(w: &BraidWord, position: usize) -> Result<SmoothingRecord> {
    let letters = w.letters();
    let letter = letters[position - 1];
    let sign = letter.sign().ok_or(Error::SingularLetter)?;
    let ascending = ascending_index(letter)?;
    // Rotate the crossing to the front and drop it.
    let mut rest = letters[position..].to_vec();
    rest.extend_from_slice(&letters[..position - 1]);
    let smoothed = BraidWord::new(w.n(), rest)?;
    let m = smoothed.permutation().cycle_len_of(ascending);
    Ok(SmoothingRecord { position, ascending, m, sign })
}

/// Winding number `m(r)` of the ascending string after smoothing crossing `r` (1-based).
pub fn winding_m(w: &BraidWord, r: usize) -> Result<usize> {
    if r == 0 || r > w.len() {
        return Err(Error::PositionOutOfRange { pos: r, len: w.len() });
    }
    w.require_knot()?;
    Ok(smoothed_winding(w, r)?.m)
}

/// Smoothing data for every crossing of a knotted, non-singular word.
pub fn smoothings(w: &BraidWord) -> Result<Vec<SmoothingRecord>> {
    w.require_nonsingular()?;
    w.require_knot()?;
    (1..=w.len()).map(|r| smoothed_winding(w, r)).collect()
}

/// `F(x) = Σ ε_r x^{2m(r) - n}`.
pub fn fiedler_poly(w: &BraidWord) -> Result<LaurentPoly> {
    let n = w.n() as i64;
    let mut f = LaurentPoly::zero('x');
    for s in smoothings(w)? {
        f.add_term(2 * s.m as i64 - n, s.sign.into());
    }
    Ok(f)
}

fn splice(prefix: &BraidWord, middle: BraidLetter, suffix: &BraidWord) -> Result<BraidWord> {
    let n = prefix.n().max(suffix.n()).max(middle.index + 1);
    let mut letters = prefix.letters().to_vec();
    letters.push(middle);
    letters.extend_from_slice(suffix.letters());
    BraidWord::new(n, letters)
}

/// `F(α σ_j β) - F(α σ_j^-1 β)` computed from both polynomials.
pub fn skein_difference(prefix: &BraidWord, j: usize, suffix: &BraidWord) -> Result<LaurentPoly> {
    let plus = splice(prefix, BraidLetter::pos(j), suffix)?;
    let minus = splice(prefix, BraidLetter::neg(j), suffix)?;
    Ok(&fiedler_poly(&plus)? - &fiedler_poly(&minus)?)
}

/// The same difference predicted from the winding of the positive crossing alone.
pub fn skein_prediction(prefix: &BraidWord, j: usize, suffix: &BraidWord) -> Result<LaurentPoly> {
    let plus = splice(prefix, BraidLetter::pos(j), suffix)?;
    let m = winding_m(&plus, prefix.len() + 1)?;
    symmetric_pair(m, plus.n())
}

/// Windings `(m₁, m₂)` of the two `σ_n` crossings of `X σ_n Y σ_n`.
pub fn exchange_windings(pair: &ExchangePair) -> Result<(usize, usize)> {
    let w = pair.positive_form();
    let (p1, p2) = pair.exchange_positions();
    Ok((winding_m(&w, p1)?, winding_m(&w, p2)?))
}

/// `F(β₁) - F(β₂)` computed from both polynomials.
pub fn exchange_fiedler_difference(pair: &ExchangePair) -> Result<LaurentPoly> {
    Ok(&fiedler_poly(pair.beta1())? - &fiedler_poly(pair.beta2())?)
}

/// `F(β₁) - F(β₂)` from the windings alone: `sym(m₂) - sym(m₁)` with `sym(m) = x^{2m-N} + x^{N-2m}`.
pub fn exchange_difference_from_windings(m1: usize, m2: usize, big_n: usize) -> Result<LaurentPoly> {
    Ok(&symmetric_pair(m2, big_n)? - &symmetric_pair(m1, big_n)?)
}

/// `F(AσᵢBσⱼC) - F(AσᵢBσⱼ⁻¹C) - F(Aσᵢ⁻¹BσⱼC) + F(Aσᵢ⁻¹Bσⱼ⁻¹C)`.
pub fn order1_alternating_sum(
    a: &BraidWord,
    i: usize,
    b: &BraidWord,
    j: usize,
    c: &BraidWord,
) -> Result<LaurentPoly> {
    let mut total = LaurentPoly::zero('x');
    for (si, sj, coeff) in [(1i8, 1i8, 1i64), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)] {
        let mut letters = a.letters().to_vec();
        letters.push(BraidLetter::with_sign(i, si));
        letters.extend_from_slice(b.letters());
        letters.push(BraidLetter::with_sign(j, sj));
        letters.extend_from_slice(c.letters());
        let n = [a.n(), b.n(), c.n(), i + 1, j + 1].into_iter().max().unwrap_or(1);
        let w = BraidWord::new(n, letters)?;
        total = &total + &fiedler_poly(&w)?.scale(&coeff.into());
    }
    Ok(total)
}

/// JSON-facing summary of one braid.
#[derive(Clone, Debug, Serialize)]
pub struct FiedlerReport {
    pub fiedler: LaurentPoly,
    pub writhe: i64,
    pub n: usize,
    pub is_knot: bool,
}

pub fn fiedler_report(w: &BraidWord) -> Result<FiedlerReport> {
    Ok(FiedlerReport { fiedler: fiedler_poly(w)?, writhe: w.writhe()?, n: w.n(), is_knot: true })
}
