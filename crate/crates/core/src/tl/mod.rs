//! Temperley–Lieb diagrams, the braid representation `Φ` and the annular trace `f`.

mod element;
mod state;

pub use element::{loop_value, tl_generator, tl_mul, TLElement};
pub use state::TLState;

use crate::algebra::{BiLaurent, LaurentPoly};
use crate::braid::{BraidWord, LetterKind};
use crate::error::Result;

fn a_pow(e: i64) -> LaurentPoly {
    LaurentPoly::var_pow('a', e)
}

/// `Φ(σ_i) = a^-1 e_i + a`, `Φ(σ_i^-1) = a e_i + a^-1`.
pub fn phi(w: &BraidWord) -> Result<TLElement> {
    w.require_nonsingular()?;
    singular_phi(w)
}

/// [`phi`] extended to singular letters by `τ_i ↦ Φ(σ_i) - Φ(σ_i^-1) = (a^-1 - a)(e_i - 1)`.
pub fn singular_phi(w: &BraidWord) -> Result<TLElement> {
    let mut acc = TLElement::identity(w.n());
    let tau = LaurentPoly::from_i64('a', &[(-1, 1), (1, -1)]);
    for l in w.letters() {
        acc = match l.kind {
            LetterKind::Positive => acc.mul_linear(l.index, &a_pow(-1), &a_pow(1))?,
            LetterKind::Negative => acc.mul_linear(l.index, &a_pow(1), &a_pow(-1))?,
            LetterKind::Singular => acc.mul_linear(l.index, &tau, &-&tau)?,
        };
    }
    Ok(acc)
}

/// `p_k(a)` with `Φ(σ_i^k) = p_k(a) e_i + a^k` for `k ≠ 0`; zero for `k = 0`.
pub fn p_k(k: i64) -> LaurentPoly {
    let mut p = LaurentPoly::zero('a');
    if k > 0 {
        for l in 0..k {
            p.add_term(k - 2 - 4 * l, if l % 2 == 0 { 1 } else { -1 }.into());
        }
    } else if k < 0 {
        for l in 0..-k {
            p.add_term(k + 2 + 4 * l, if l % 2 == 0 { 1 } else { -1 }.into());
        }
    }
    p
}

/// `Φ(σ_i^k)` in `TL_n` from the closed form; `k = 0` is the identity.
pub fn phi_power(n: usize, i: usize, k: i64) -> Result<TLElement> {
    let e = TLState::generator(n, i)?;
    if k == 0 {
        return Ok(TLElement::identity(n));
    }
    let mut out = TLElement::from_state(e, p_k(k));
    out.add_term(TLState::identity(n), a_pow(k));
    Ok(out)
}

/// `(contractible, non-contractible)` components of the closure of a state.
pub fn closure_components(s: &TLState) -> (usize, usize) {
    s.closure_components()
}

/// `f(Σ c_s s) = Σ c_s d^p x^q`.
pub fn trace_f(u: &TLElement) -> BiLaurent {
    let d = loop_value();
    let mut out = BiLaurent::zero();
    for (s, c) in u.terms() {
        let (p, q) = s.closure_components();
        let scalar = c * &d.pow(p as u32);
        out = &out + &BiLaurent::from_a_poly(&scalar, q as i64);
    }
    out
}

/// `f∘Φ` of a braid word.
pub fn trace_of_braid(w: &BraidWord) -> Result<BiLaurent> {
    Ok(trace_f(&phi(w)?))
}

/// Builds the product `e_{i_1} e_{i_2} ...` in `TL_n`, loops included as powers of `d`.
pub fn generator_word(n: usize, indices: &[usize]) -> Result<TLElement> {
    let mut acc = TLElement::identity(n);
    let zero = LaurentPoly::zero('a');
    let one = LaurentPoly::one('a');
    for &i in indices {
        acc = acc.mul_linear(i, &one, &zero)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn powers_match_closed_form() {
        assert_eq!(p_k(1), LaurentPoly::from_i64('a', &[(-1, 1)]));
        assert_eq!(p_k(3), LaurentPoly::from_i64('a', &[(1, 1), (-3, -1), (-7, 1)]));
        let cube = phi(&BraidWord::from_ints(2, &[1, 1, 1]).unwrap()).unwrap();
        assert_eq!(cube, phi_power(2, 1, 3).unwrap());
        assert_eq!(phi_power(3, 2, 0).unwrap(), TLElement::identity(3));
    }

    #[test]
    fn inverse_letters_cancel() {
        let w = BraidWord::from_ints(2, &[1, -1]).unwrap();
        assert_eq!(phi(&w).unwrap(), TLElement::identity(2));
    }

    #[test]
    fn trefoil_trace() {
        let f = trace_of_braid(&BraidWord::from_ints(2, &[1, 1, 1]).unwrap()).unwrap();
        let expected = &BiLaurent::from_a_poly(&(&p_k(3) * &loop_value()), 0)
            + &BiLaurent::from_i64(&[(3, 2, 1)]);
        assert_eq!(f, expected);
    }

    #[test]
    fn singular_letter_image() {
        let w: BraidWord = "S1".parse().unwrap();
        let img = singular_phi(&w).unwrap();
        let e1 = TLState::generator(2, 1).unwrap();
        assert_eq!(img.coeff(&e1), LaurentPoly::from_i64('a', &[(-1, 1), (1, -1)]));
        assert_eq!(img.coeff(&TLState::identity(2)), LaurentPoly::from_i64('a', &[(1, 1), (-1, -1)]));
        assert_eq!(phi(&w), Err(Error::SingularLetter));
    }
}
