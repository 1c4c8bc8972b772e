//! Cycle calculus behind the exchange-move analysis: intersection orders of two cycles,
//! the full-cycle product criterion and the cycle lengths of the two exchange products.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::braid::{ExchangePair, Permutation};
use crate::error::{Error, Result};

/// A cycle kept in the order it was written; `(3 1 2)` and `(1 2 3)` are the same
/// permutation but give different intersection orders.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cycle(Vec<usize>);

impl Cycle {
    pub fn new(digits: Vec<usize>) -> Result<Self> {
        if digits.is_empty() {
            return Err(Error::MalformedCycle("empty cycle".into()));
        }
        let mut seen = BTreeSet::new();
        for &d in &digits {
            if d == 0 || !seen.insert(d) {
                return Err(Error::MalformedCycle(format!("bad digit {d} in {digits:?}")));
            }
        }
        Ok(Cycle(digits))
    }

    pub fn digits(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, d: usize) -> bool {
        self.0.contains(&d)
    }

    pub fn max_digit(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// As a permutation of `{1..n}`, `n` at least the largest digit.
    pub fn to_permutation(&self, n: usize) -> Permutation {
        Permutation::from_cycles(n.max(self.max_digit()), std::slice::from_ref(&self.0)).expect("validated cycle")
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", body.join(" "))
    }
}

impl FromStr for Cycle {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let cycles = parse_cycles(s)?;
        match <[Cycle; 1]>::try_from(cycles) {
            Ok([c]) => Ok(c),
            Err(_) => Err(Error::MalformedCycle(format!("`{s}` is not a single cycle"))),
        }
    }
}

impl Serialize for Cycle {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Parses cycle notation such as `(1 7 3)(2 8 6)`; `()` is the empty product.
pub fn parse_cycles(text: &str) -> Result<Vec<Cycle>> {
    let mut out = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(Error::MalformedCycle(format!("expected `(` at `{rest}`")));
        };
        let Some(close) = body.find(')') else {
            return Err(Error::MalformedCycle(format!("unclosed cycle in `{text}`")));
        };
        let digits = body[..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::MalformedCycle(format!("bad digit `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        if !digits.is_empty() {
            out.push(Cycle::new(digits)?);
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(out)
}

/// Product (left to right) of cycle notation on `{1..n}`; `n = 0` means the largest digit.
pub fn parse_permutation(text: &str, n: usize) -> Result<Permutation> {
    let cycles = parse_cycles(text)?;
    let degree = cycles.iter().map(Cycle::max_digit).max().unwrap_or(0).max(n);
    let raw: Vec<Vec<usize>> = cycles.into_iter().map(|c| c.0).collect();
    Permutation::from_cycles(degree, &raw)
}

/// Disjoint cycles of a permutation, fixed points included, each starting at its least element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleDecomposition {
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// Lengths, largest first.
    pub fn lengths(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles.iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    /// Cycles of length at least two.
    pub fn nontrivial(&self) -> Vec<&Vec<usize>> {
        self.cycles.iter().filter(|c| c.len() > 1).collect()
    }

    pub fn len_of(&self, d: usize) -> Option<usize> {
        self.cycles.iter().find(|c| c.contains(&d)).map(Vec::len)
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cycles {
            let body: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for CycleDecomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.cycles.serialize(serializer)
    }
}

pub fn cycles(p: &Permutation) -> CycleDecomposition {
    CycleDecomposition { cycles: p.cycles() }
}

/// Relative order of the digits shared by two cycles.
///
/// `nu_a` sends the `k`-th smallest common digit to the `k`-th common digit met when
/// reading `A` as written; likewise `nu_b`. All three are permutations of `{1..m}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntersectionOrder {
    pub support: Vec<usize>,
    pub nu_a: Permutation,
    pub nu_b: Permutation,
    pub nu_ab: Permutation,
}

impl IntersectionOrder {
    /// Renders a permutation of `{1..m}` in cycle notation on the support digits.
    pub fn on_support(&self, p: &Permutation) -> String {
        let cycles: Vec<String> = p
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let body: Vec<String> = c.iter().map(|&k| self.support[k - 1].to_string()).collect();
                format!("({})", body.join(" "))
            })
            .collect();
        if cycles.is_empty() {
            "id".to_string()
        } else {
            cycles.concat()
        }
    }

    /// `nu_ab` has an even number of inversions.
    pub fn nu_ab_even(&self) -> bool {
        self.nu_ab.sign() == 1
    }
}

impl Serialize for IntersectionOrder {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("IntersectionOrder", 4)?;
        s.serialize_field("support", &self.support)?;
        s.serialize_field("nu_a", &self.on_support(&self.nu_a))?;
        s.serialize_field("nu_b", &self.on_support(&self.nu_b))?;
        s.serialize_field("nu_ab", &self.on_support(&self.nu_ab))?;
        s.end()
    }
}

fn order_in(c: &Cycle, support: &[usize]) -> Permutation {
    let images: Vec<usize> = c
        .digits()
        .iter()
        .filter_map(|d| support.binary_search(d).ok().map(|k| k + 1))
        .collect();
    Permutation::from_images(&images).expect("support digits appear once")
}

pub fn intersection_order(a: &Cycle, b: &Cycle) -> Result<IntersectionOrder> {
    let sa: BTreeSet<usize> = a.digits().iter().copied().collect();
    let support: Vec<usize> = b.digits().iter().copied().filter(|d| sa.contains(d)).collect::<BTreeSet<_>>().into_iter().collect();
    if support.is_empty() {
        return Err(Error::EmptyIntersection);
    }
    let nu_a = order_in(a, &support);
    let nu_b = order_in(b, &support);
    let nu_ab = nu_a.inverse().then(&nu_b);
    Ok(IntersectionOrder { support, nu_a, nu_b, nu_ab })
}

fn union_size(a: &Cycle, b: &Cycle) -> Result<usize> {
    let digits: BTreeSet<usize> = a.digits().iter().chain(b.digits()).copied().collect();
    let n = digits.iter().next_back().copied().unwrap_or(0);
    if digits.len() != n {
        return Err(Error::IncompleteUnion(n));
    }
    Ok(n)
}

/// The cycle-intersection criterion for `A·B` to be a single cycle on `A ∪ B`:
/// `|A∩B|` odd and `ν_{A,B}` even.
pub fn is_full_cycle_product(a: &Cycle, b: &Cycle) -> Result<bool> {
    union_size(a, b)?;
    match intersection_order(a, b) {
        Ok(order) => Ok(order.support.len() % 2 == 1 && order.nu_ab_even()),
        Err(Error::EmptyIntersection) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Multiplies `A·B` directly and tests for a full cycle on `A ∪ B`.
pub fn direct_full_cycle_product(a: &Cycle, b: &Cycle) -> Result<bool> {
    let n = union_size(a, b)?;
    Ok(a.to_permutation(n).then(&b.to_permutation(n)).is_full_cycle())
}

/// How the two exchange products matched the `{l, n+1-l}` / `{l-1, n+2-l}` shape.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LengthPattern {
    /// `A s_n B` has lengths `{l, n+1-l}` and `A B s_n` has `{l-1, n+2-l}`.
    Direct,
    /// The roles of `l` and `l-1` are exchanged between the two products.
    Swapped,
    Other,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ExchangeLengths {
    /// Length of the `A s_n B` cycle through `n+1`.
    pub l: usize,
    pub as_nb: Permutation,
    pub abs_n: Permutation,
    pub as_nb_lengths: Vec<usize>,
    pub abs_n_lengths: Vec<usize>,
    pub pattern: LengthPattern,
}

fn pair_lengths(a: usize, b: usize) -> Vec<usize> {
    let mut v: Vec<usize> = [a, b].into_iter().filter(|&x| x > 0).collect();
    v.sort_unstable_by(|x, y| y.cmp(x));
    v
}

/// Cycle lengths of `A s_n B` and `A B s_n` on `{1..n+1}`; requires `A·B` to be a full cycle.
pub fn exchange_lengths(a: &Permutation, b: &Permutation, n: usize) -> Result<ExchangeLengths> {
    let m = n + 1;
    let (a, b) = (a.extend(m), b.extend(m));
    if a.degree() != m || b.degree() != m {
        return Err(Error::BadParameter(format!("permutations must act on 1..{m}")));
    }
    if !a.then(&b).is_full_cycle() {
        return Err(Error::NotFullCycle);
    }
    let s = Permutation::transposition(m, n, n + 1);
    let as_nb = a.then(&s).then(&b);
    let abs_n = a.then(&b).then(&s);
    let l = as_nb.cycle_len_of(n + 1);
    let as_nb_lengths = as_nb.cycle_type();
    let abs_n_lengths = abs_n.cycle_type();
    let pattern = if as_nb_lengths == pair_lengths(l, m - l) && abs_n_lengths == pair_lengths(l - 1, m + 1 - l) {
        LengthPattern::Direct
    } else if (1..=m).any(|k| {
        abs_n_lengths == pair_lengths(k, m - k) && as_nb_lengths == pair_lengths(k - 1, m + 1 - k)
    }) {
        LengthPattern::Swapped
    } else {
        LengthPattern::Other
    };
    Ok(ExchangeLengths { l, as_nb, abs_n, as_nb_lengths, abs_n_lengths, pattern })
}

/// [`exchange_lengths`] with `A = π_X` and `B = s_n π_Y s_n` taken from an exchange pair.
pub fn exchange_lengths_of(pair: &ExchangePair) -> Result<ExchangeLengths> {
    let n = pair.n();
    let m = n + 1;
    let s = Permutation::transposition(m, n, m);
    let a = pair.x().permutation().extend(m);
    let b = s.then(&pair.y().permutation().extend(m)).then(&s);
    exchange_lengths(&a, &b, n)
}
