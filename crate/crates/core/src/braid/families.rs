//! Exchange-related pairs used throughout the worked examples.

use super::exchange::{exchange_pair, ExchangePair};
use super::word::{BraidLetter, BraidWord};
use crate::error::{Error, Result};

/// `X = σ₃σ₂σ₁`, `Y = σ₃σ₂^{2k+1}σ₁` in `B₄`; the Fiedler polynomial cannot separate them.
pub fn example1(k: usize) -> ExchangePair {
    let x = BraidWord::from_ints(4, &[3, 2, 1]).expect("valid");
    let mut y = vec![3];
    y.extend(std::iter::repeat_n(2, 2 * k + 1));
    y.push(1);
    let y = BraidWord::from_ints(4, &y).expect("valid");
    exchange_pair(&x, &y).expect("same index")
}

/// `X = σ₃σ₂σ₁`, `Y = σ₂σ₁σ₃` in `B₄`; separated by the Fiedler polynomial.
pub fn example2() -> ExchangePair {
    let x = BraidWord::from_ints(4, &[3, 2, 1]).expect("valid");
    let y = BraidWord::from_ints(4, &[2, 1, 3]).expect("valid");
    exchange_pair(&x, &y).expect("same index")
}

/// `X = σ_{n-1}⋯σ₁`, `Y = σ_{n-1}⋯σ_{i+1} σ_i σ_{i+1}^-1⋯σ_{n-1}^-1` in `B_n`, `n` even.
pub fn example3(n: usize, i: usize) -> Result<ExchangePair> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::BadParameter(format!("n = {n} must be even and at least 2")));
    }
    if i == 0 || i >= n {
        return Err(Error::BadParameter(format!("i = {i} must lie in 1..{}", n - 1)));
    }
    let x: Vec<BraidLetter> = (1..n).rev().map(BraidLetter::pos).collect();
    let mut y: Vec<BraidLetter> = (i + 1..n).rev().map(BraidLetter::pos).collect();
    y.push(BraidLetter::pos(i));
    y.extend((i + 1..n).map(BraidLetter::neg));
    exchange_pair(&BraidWord::new(n, x)?, &BraidWord::new(n, y)?)
}
