use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::ser::{Serialize, SerializeMap, Serializer};

use super::laurent::LaurentPoly;

/// Integer Laurent polynomial in two variables `a` and `x`.
///
/// Keys are `(exponent of a, exponent of x)`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct BiLaurent {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl BiLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, BigInt::from(1))
    }

    pub fn monomial(a_exp: i64, x_exp: i64, c: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(a_exp, x_exp, c);
        p
    }

    /// `p(a) * x^x_exp`.
    pub fn from_a_poly(p: &LaurentPoly, x_exp: i64) -> Self {
        let mut out = Self::zero();
        for (e, c) in p.terms() {
            out.add_term(e, x_exp, c.clone());
        }
        out
    }

    pub fn from_i64(terms: &[(i64, i64, i64)]) -> Self {
        let mut out = Self::zero();
        for &(ea, ex, c) in terms {
            out.add_term(ea, ex, BigInt::from(c));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, a_exp: i64, x_exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((a_exp, x_exp)).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(a_exp, x_exp));
        }
    }

    /// Iterates `((a_exp, x_exp), coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &BigInt)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    /// Distinct powers of `x` present, ascending.
    pub fn x_degrees(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.terms.keys().map(|&(_, q)| q).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Coefficient of `x^q`, a Laurent polynomial in `a`.
    pub fn x_coeff(&self, q: i64) -> LaurentPoly {
        LaurentPoly::from_terms(
            'a',
            self.terms.iter().filter(|((_, ex), _)| *ex == q).map(|((ea, _), c)| (*ea, c.clone())),
        )
    }

    /// Multiplies by a polynomial in `a` alone.
    pub fn mul_a(&self, p: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for ((ea, ex), c) in self.terms() {
            for (e, d) in p.terms() {
                out.add_term(ea + e, ex, c * d);
            }
        }
        out
    }

    /// Substitutes a polynomial in `a` for `x`, giving a polynomial in `a`.
    pub fn substitute_x(&self, value: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero('a');
        for q in self.x_degrees() {
            let coeff = self.x_coeff(q);
            let power = if q >= 0 {
                value.pow(q as u32)
            } else {
                panic!("substitute_x needs non-negative x powers")
            };
            out = &out + &(&coeff * &power);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for q in self.x_degrees() {
            map.insert(q.to_string(), self.x_coeff(q).to_json());
        }
        serde_json::Value::Object(map)
    }
}

impl fmt::Display for BiLaurent {
    /// Grouped by ascending power of `x`: `(-a^3 - a^-9) + (a^3)x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, q) in self.x_degrees().into_iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})", self.x_coeff(q))?;
            match q {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{q}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for BiLaurent {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let degrees = self.x_degrees();
        let mut map = serializer.serialize_map(Some(degrees.len()))?;
        for q in degrees {
            map.serialize_entry(&q.to_string(), &self.x_coeff(q))?;
        }
        map.end()
    }
}

impl<'a> Add<&'a BiLaurent> for &'a BiLaurent {
    type Output = BiLaurent;
    fn add(self, rhs: &'a BiLaurent) -> BiLaurent {
        let mut out = self.clone();
        for ((ea, ex), c) in rhs.terms() {
            out.add_term(ea, ex, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a BiLaurent> for &'a BiLaurent {
    type Output = BiLaurent;
    fn sub(self, rhs: &'a BiLaurent) -> BiLaurent {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a BiLaurent> for &'a BiLaurent {
    type Output = BiLaurent;
    fn mul(self, rhs: &'a BiLaurent) -> BiLaurent {
        let mut out = BiLaurent::zero();
        for ((a1, x1), c1) in self.terms() {
            for ((a2, x2), c2) in rhs.terms() {
                out.add_term(a1 + a2, x1 + x2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BiLaurent {
    type Output = BiLaurent;
    fn neg(self) -> BiLaurent {
        BiLaurent { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl Add for BiLaurent {
    type Output = BiLaurent;
    fn add(self, rhs: BiLaurent) -> BiLaurent {
        &self + &rhs
    }
}

impl Sub for BiLaurent {
    type Output = BiLaurent;
    fn sub(self, rhs: BiLaurent) -> BiLaurent {
        &self - &rhs
    }
}

impl Mul for BiLaurent {
    type Output = BiLaurent;
    fn mul(self, rhs: BiLaurent) -> BiLaurent {
        &self * &rhs
    }
}
