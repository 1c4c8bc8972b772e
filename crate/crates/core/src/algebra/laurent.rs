use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::error::{Error, Result};

/// Exact coefficient ring for [`Laurent`] polynomials.
pub trait Coefficient:
    Clone + PartialEq + Signed + fmt::Display + fmt::Debug + Send + Sync
{
    /// JSON form: a number when it fits, a string otherwise.
    fn to_json(&self) -> serde_json::Value;
}

impl Coefficient for BigInt {
    fn to_json(&self) -> serde_json::Value {
        match self.to_i64() {
            Some(v) => v.into(),
            None => self.to_string().into(),
        }
    }
}

impl Coefficient for BigRational {
    fn to_json(&self) -> serde_json::Value {
        if self.is_integer() {
            self.to_integer().to_json()
        } else {
            self.to_string().into()
        }
    }
}

/// Sparse Laurent polynomial in a single named variable.
///
/// Terms are kept in canonical form: exponents ascending, no zero coefficients.
/// Two polynomials are equal iff their canonical forms agree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Laurent<C> {
    var: char,
    terms: BTreeMap<i64, C>,
}

/// Integer-coefficient Laurent polynomial; used for `x` and for the TL scalar `a`.
pub type LaurentPoly = Laurent<BigInt>;

/// Rational-coefficient Laurent polynomial; the `t^k` coefficients of a truncated series.
pub type RationalPoly = Laurent<BigRational>;

impl<C: Coefficient> Laurent<C> {
    pub fn zero(var: char) -> Self {
        Laurent { var, terms: BTreeMap::new() }
    }

    pub fn one(var: char) -> Self {
        Self::constant(var, C::one())
    }

    pub fn constant(var: char, c: C) -> Self {
        Self::monomial(var, 0, c)
    }

    /// `c * var^exp`.
    pub fn monomial(var: char, exp: i64, c: C) -> Self {
        let mut p = Self::zero(var);
        p.add_term(exp, c);
        p
    }

    /// `var^exp`.
    pub fn var_pow(var: char, exp: i64) -> Self {
        Self::monomial(var, exp, C::one())
    }

    /// Sums the given `(exponent, coefficient)` pairs.
    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(var: char, terms: I) -> Self {
        let mut p = Self::zero(var);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn var(&self) -> char {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Adds `c * var^exp` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, exp: i64, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_var(&self, other: &Self) -> Result<()> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(Error::VariableMismatch(self.var, other.var))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let mut out = Self::zero(self.var);
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.var);
        }
        Laurent {
            var: self.var,
            terms: self.terms.iter().map(|(e, v)| (*e, v.clone() * c.clone())).collect(),
        }
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, k: i64) -> Self {
        Laurent {
            var: self.var,
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.var);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `var -> var^-1`.
    pub fn invert_var(&self) -> Self {
        Laurent {
            var: self.var,
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Value at `var = 1`.
    pub fn sum_coeffs(&self) -> C {
        self.terms.values().fold(C::zero(), |acc, c| acc + c.clone())
    }

    pub fn with_var(&self, var: char) -> Self {
        Laurent { var, terms: self.terms.clone() }
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Laurent<D> {
        Laurent::from_terms(self.var, self.terms().map(|(e, c)| (e, f(c))))
    }

    /// `(exponent, coefficient)` pairs as a JSON object with string keys.
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> =
            self.terms().map(|(e, c)| (e.to_string(), c.to_json())).collect();
        serde_json::Value::Object(map)
    }
}

impl LaurentPoly {
    pub fn from_i64(var: char, terms: &[(i64, i64)]) -> Self {
        Self::from_terms(var, terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    pub fn to_rational(&self) -> RationalPoly {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }

    /// Exact quotient `self / divisor` in the Laurent ring over the integers, if one exists.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() || self.var != divisor.var {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.var));
        }
        // Divide the ordinary polynomials obtained by clearing the lowest power.
        let d_low = divisor.min_exp()?;
        let d_high = divisor.max_exp()?;
        let d_lead = divisor.coeff(d_high);
        let mut rem = self.clone();
        let mut quot = Self::zero(self.var);
        let floor = self.min_exp()? - d_low;
        while let Some(top) = rem.max_exp() {
            let shift = top - d_high;
            if shift < floor {
                return None;
            }
            let lead = rem.coeff(top);
            if !(&lead % &d_lead).is_zero() {
                return None;
            }
            let q = lead / &d_lead;
            let step = divisor.shift(shift).scale(&q);
            quot.add_term(shift, q);
            rem = &rem - &step;
        }
        Some(quot)
    }
}

impl<C: Coefficient> fmt::Display for Laurent<C> {
    /// Ascending exponents, explicit signs, caret exponents: `-x^-3 + x^-1 + x - x^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                let s = mag.to_string();
                if s.contains('/') {
                    write!(f, "({s})")?;
                } else {
                    write!(f, "{s}")?;
                }
            }
            write!(f, "{}", self.var)?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> Serialize for Laurent<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (e, c) in self.terms() {
            map.serialize_entry(&e.to_string(), &c.to_json())?;
        }
        map.end()
    }
}

// Operator forms panic on a variable mismatch; use the `try_*` methods when the
// variables come from untrusted input.

impl<'a, C: Coefficient> Add<&'a Laurent<C>> for &'a Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, rhs: &'a Laurent<C>) -> Laurent<C> {
        self.try_add(rhs).expect("Laurent addition")
    }
}

impl<'a, C: Coefficient> Sub<&'a Laurent<C>> for &'a Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: &'a Laurent<C>) -> Laurent<C> {
        self.try_sub(rhs).expect("Laurent subtraction")
    }
}

impl<'a, C: Coefficient> Mul<&'a Laurent<C>> for &'a Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: &'a Laurent<C>) -> Laurent<C> {
        self.try_mul(rhs).expect("Laurent multiplication")
    }
}

impl<C: Coefficient> Add for Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, rhs: Laurent<C>) -> Laurent<C> {
        &self + &rhs
    }
}

impl<C: Coefficient> Sub for Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: Laurent<C>) -> Laurent<C> {
        &self - &rhs
    }
}

impl<C: Coefficient> Mul for Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: Laurent<C>) -> Laurent<C> {
        &self * &rhs
    }
}

impl<C: Coefficient> Neg for &Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        Laurent {
            var: self.var,
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl<C: Coefficient> Neg for Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        -&self
    }
}

/// Product of two polynomials in the same variable.
pub fn laurent_mul(p: &LaurentPoly, q: &LaurentPoly) -> Result<LaurentPoly> {
    p.try_mul(q)
}

/// `x^(2m-n) + x^(n-2m)`, the symmetric pair contributed by one crossing change.
pub fn symmetric_pair(m: usize, n: usize) -> Result<LaurentPoly> {
    if m == 0 || m >= n {
        return Err(Error::WindingOutOfRange { m, n });
    }
    let e = 2 * m as i64 - n as i64;
    Ok(LaurentPoly::from_i64('x', &[(e, 1), (-e, 1)]))
}
