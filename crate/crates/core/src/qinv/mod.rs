//! Finite-type invariants `Q_{β,k}` from the trace `f∘Φ` with `a = e^t`.

mod scan;

pub use scan::{conjecture_scan, ScanConfig, ScanRecord, ScanReport, ScanSummary, SCHEMA_VERSION};

use crate::algebra::{exp_substitute, LaurentPoly, RationalPoly, TruncatedSeries};
use crate::braid::{BraidLetter, BraidWord, ExchangePair};
use crate::error::{Error, Result};
use crate::tl::{phi, singular_phi, trace_f, TLElement};

/// Environment variable that overrides the default truncation order.
pub const TRUNC_ORDER_VAR: &str = "BRAID_TRUNC_ORDER";

/// Truncation order used to extract `Q_k`: `max(k, 2)` unless `BRAID_TRUNC_ORDER` is set,
/// in which case `max(k, value)`.
pub fn truncation_order(k: usize) -> usize {
    let base = std::env::var(TRUNC_ORDER_VAR).ok().and_then(|v| v.trim().parse::<usize>().ok()).unwrap_or(2);
    k.max(base)
}

/// `f∘Φ(w)` with `a = e^t`, truncated at `t^order`.
pub fn q_series(w: &BraidWord, order: usize) -> Result<TruncatedSeries> {
    Ok(exp_substitute(&trace_f(&phi(w)?), order))
}

/// `Q_{w,k}(x)`, the coefficient of `t^k`.
pub fn q_invariant(w: &BraidWord, k: usize) -> Result<RationalPoly> {
    Ok(q_series(w, truncation_order(k))?.coeff(k))
}

/// `(a^-1 - a)^s`.
pub fn singular_factor(s: usize) -> LaurentPoly {
    LaurentPoly::from_i64('a', &[(-1, 1), (1, -1)]).pow(s as u32)
}

/// True iff `t^0 .. t^{s-1}` of `f∘Φ` vanish for a word with `s ≥ 1` singular letters.
pub fn vanishing_order_check(w: &BraidWord) -> Result<bool> {
    let s = w.singular_count();
    if s == 0 {
        return Err(Error::BadParameter("word has no singular letters".into()));
    }
    Ok(exp_substitute(&trace_f(&singular_phi(w)?), s - 1).is_zero())
}

/// True iff every state coefficient of the singular image is divisible by `(a^-1 - a)^s`.
pub fn singular_divisibility(w: &BraidWord) -> Result<bool> {
    let factor = singular_factor(w.singular_count());
    Ok(singular_phi(w)?.terms().all(|(_, c)| c.div_exact(&factor).is_some()))
}

fn embedded_phi(w: &BraidWord, n: usize) -> Result<TLElement> {
    phi(&w.embed(n)?)
}

/// `δ = (a² - a⁻²)[Φ(X) e_n Φ(Y) - Φ(X) Φ(Y) e_n]` in `TL_{n+1}`.
pub fn exchange_delta(pair: &ExchangePair) -> Result<TLElement> {
    let n = pair.n();
    let m = n + 1;
    let fx = embedded_phi(pair.x(), m)?;
    let fy = embedded_phi(pair.y(), m)?;
    let zero = LaurentPoly::zero('a');
    let one = LaurentPoly::one('a');
    let xe = fx.mul_linear(n, &one, &zero)?;
    let xey = xe.try_mul(&fy)?;
    let xye = fx.try_mul(&fy)?.mul_linear(n, &one, &zero)?;
    let coeff = LaurentPoly::from_i64('a', &[(2, 1), (-2, -1)]);
    Ok(xey.try_sub(&xye)?.scale(&coeff))
}

/// `Φ(β₁) - Φ(β₂)` computed from the two braids directly.
pub fn exchange_delta_direct(pair: &ExchangePair) -> Result<TLElement> {
    phi(pair.beta1())?.try_sub(&phi(pair.beta2())?)
}

/// `Q_{β₁,k} - Q_{β₂,k}` through the trace of `δ`.
pub fn q_difference(pair: &ExchangePair, k: usize) -> Result<RationalPoly> {
    Ok(exp_substitute(&trace_f(&exchange_delta(pair)?), truncation_order(k)).coeff(k))
}

/// `Q_{β₁,k} - Q_{β₂,k}` from the two invariants separately.
pub fn q_difference_direct(pair: &ExchangePair, k: usize) -> Result<RationalPoly> {
    Ok(&q_invariant(pair.beta1(), k)? - &q_invariant(pair.beta2(), k)?)
}

/// The mirror image under `σ_i ↦ σ_{n-i}`, which conjugates by the half twist and so
/// leaves every conjugacy invariant unchanged.
pub fn flip(w: &BraidWord) -> BraidWord {
    let n = w.n();
    let letters = w
        .letters()
        .iter()
        .map(|l| BraidLetter { index: n - l.index, kind: l.kind })
        .collect();
    BraidWord::new(n, letters).expect("flipped indices stay in range")
}
