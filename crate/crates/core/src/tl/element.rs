use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use super::state::TLState;
use crate::algebra::LaurentPoly;
use crate::error::{Error, Result};

/// Loop value `d = -a^2 - a^-2`.
pub fn loop_value() -> LaurentPoly {
    LaurentPoly::from_i64('a', &[(2, -1), (-2, -1)])
}

/// A linear combination of TL states with coefficients in `Z[a, a^-1]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TLElement {
    n: usize,
    terms: BTreeMap<TLState, LaurentPoly>,
}

impl TLElement {
    pub fn zero(n: usize) -> Self {
        TLElement { n, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_state(TLState::identity(n), LaurentPoly::one('a'))
    }

    pub fn from_state(state: TLState, coeff: LaurentPoly) -> Self {
        let mut e = Self::zero(state.n());
        e.add_term(state, coeff);
        e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TLState, &LaurentPoly)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, s: &TLState) -> LaurentPoly {
        self.terms.get(s).cloned().unwrap_or_else(|| LaurentPoly::zero('a'))
    }

    pub fn add_term(&mut self, state: TLState, coeff: LaurentPoly) {
        debug_assert_eq!(state.n(), self.n);
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&state) {
            Some(c) => {
                *c = &*c + &coeff;
                if c.is_zero() {
                    self.terms.remove(&state);
                }
            }
            None => {
                self.terms.insert(state, coeff);
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::StrandMismatch(self.n, other.n))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (s, c) in other.terms() {
            out.add_term(s.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(&LaurentPoly::from_i64('a', &[(0, -1)])))
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.n);
        if c.is_zero() {
            return out;
        }
        for (s, k) in self.terms() {
            out.add_term(s.clone(), k * c);
        }
        out
    }

    /// `self · other`, `self` stacked on top.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let d = loop_value();
        let mut out = Self::zero(self.n);
        for (s, c) in self.terms() {
            for (t, k) in other.terms() {
                let (st, loops) = s.compose(t)?;
                out.add_term(st, &(c * k) * &d.pow(loops as u32));
            }
        }
        Ok(out)
    }

    /// `self · (c_e e_i + c_1 · 1)` without building the right factor.
    pub fn mul_linear(&self, i: usize, c_e: &LaurentPoly, c_1: &LaurentPoly) -> Result<Self> {
        let e = TLState::generator(self.n, i)?;
        let d = loop_value();
        let mut out = self.scale(c_1);
        for (s, c) in self.terms() {
            let (st, loops) = s.compose(&e)?;
            out.add_term(st, &(c * c_e) * &d.pow(loops as u32));
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

/// The generator `e_i` of `TL_n`.
pub fn tl_generator(n: usize, i: usize) -> Result<TLElement> {
    Ok(TLElement::from_state(TLState::generator(n, i)?, LaurentPoly::one('a')))
}

pub fn tl_mul(u: &TLElement, v: &TLElement) -> Result<TLElement> {
    u.try_mul(v)
}

impl fmt::Display for TLElement {
    /// `(coeff)*[chords] + ...`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms().map(|(s, c)| format!("({c})*{s}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for TLElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(serde::Serialize)]
        struct Term<'a> {
            state: &'a TLState,
            coeff: &'a LaurentPoly,
        }
        let terms: Vec<Term> = self.terms().map(|(state, coeff)| Term { state, coeff }).collect();
        let mut s = serializer.serialize_struct("TLElement", 2)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("terms", &terms)?;
        s.end()
    }
}
