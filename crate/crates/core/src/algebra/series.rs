use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::bilaurent::BiLaurent;
use super::laurent::{LaurentPoly, RationalPoly};

/// Power series in `t` truncated after `t^order`; coefficients are rational polynomials in `x`.
///
/// Every operation discards terms of `t`-degree above `order`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<RationalPoly>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { order, coeffs: vec![RationalPoly::zero('x'); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = RationalPoly::one('x');
        s
    }

    /// Builds a series from its leading coefficients; missing ones are zero, extra ones dropped.
    pub fn from_coeffs(order: usize, coeffs: Vec<RationalPoly>) -> Self {
        let mut s = Self::zero(order);
        for (k, c) in coeffs.into_iter().enumerate().take(order + 1) {
            s.coeffs[k] = c.with_var('x');
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `t^k`; zero beyond the truncation order.
    pub fn coeff(&self, k: usize) -> RationalPoly {
        self.coeffs.get(k).cloned().unwrap_or_else(|| RationalPoly::zero('x'))
    }

    pub fn coeffs(&self) -> &[RationalPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RationalPoly::is_zero)
    }

    /// Lowest `k` with a non-zero `t^k` coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let coeffs = (0..=order).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect();
        TruncatedSeries { order, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let coeffs = (0..=order).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect();
        TruncatedSeries { order, coeffs }
    }

    /// Product truncated at the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut out = Self::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(order - i) {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                let term = &self.coeffs[i] * &other.coeffs[j];
                out.coeffs[i + j] = &out.coeffs[i + j] + &term;
            }
        }
        out
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.order + 1)
    }
}

/// `e^(m t)` truncated at `t^order`: coefficients `m^j / j!`.
fn exp_coeffs(m: i64, order: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(order + 1);
    let mut c = BigRational::one();
    out.push(c.clone());
    for j in 1..=order {
        c *= BigRational::new(BigInt::from(m), BigInt::from(j as u64));
        out.push(c.clone());
    }
    out
}

/// Substitutes `a = e^t` into `p` and truncates at `t^order`, leaving `x` symbolic.
pub fn exp_substitute(p: &BiLaurent, order: usize) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(order);
    for ((ea, ex), c) in p.terms() {
        let c = BigRational::from_integer(c.clone());
        for (j, e) in exp_coeffs(ea, order).into_iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            out.coeffs[j].add_term(ex, e * c.clone());
        }
    }
    out
}

/// [`exp_substitute`] for a polynomial in `a` alone.
pub fn exp_substitute_a(p: &LaurentPoly, order: usize) -> TruncatedSeries {
    exp_substitute(&BiLaurent::from_a_poly(p, 0), order)
}
