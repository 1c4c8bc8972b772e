use std::fmt;
use std::str::FromStr;

use serde::ser::{Serialize, SerializeStruct, SerializeTuple, Serializer};

use super::permutation::Permutation;
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum LetterKind {
    Positive,
    Negative,
    /// Transverse double point between strands `i` and `i+1`.
    Singular,
}

/// One generator `σ_i`, `σ_i^-1` or singular `τ_i`; `index` is 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct BraidLetter {
    pub index: usize,
    pub kind: LetterKind,
}

impl BraidLetter {
    pub fn pos(index: usize) -> Self {
        BraidLetter { index, kind: LetterKind::Positive }
    }

    pub fn neg(index: usize) -> Self {
        BraidLetter { index, kind: LetterKind::Negative }
    }

    pub fn singular(index: usize) -> Self {
        BraidLetter { index, kind: LetterKind::Singular }
    }

    /// `σ_i^sign`.
    pub fn with_sign(index: usize, sign: i8) -> Self {
        if sign > 0 {
            Self::pos(index)
        } else {
            Self::neg(index)
        }
    }

    pub fn is_singular(&self) -> bool {
        self.kind == LetterKind::Singular
    }

    /// Crossing sign, `None` for singular letters.
    pub fn sign(&self) -> Option<i8> {
        match self.kind {
            LetterKind::Positive => Some(1),
            LetterKind::Negative => Some(-1),
            LetterKind::Singular => None,
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        match self.kind {
            LetterKind::Positive => Some(Self::neg(self.index)),
            LetterKind::Negative => Some(Self::pos(self.index)),
            LetterKind::Singular => None,
        }
    }

    fn kind_tag(&self) -> &'static str {
        match self.kind {
            LetterKind::Positive => "+",
            LetterKind::Negative => "-",
            LetterKind::Singular => "s",
        }
    }
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            LetterKind::Positive => write!(f, "{}", self.index),
            LetterKind::Negative => write!(f, "-{}", self.index),
            LetterKind::Singular => write!(f, "S{}", self.index),
        }
    }
}

impl Serialize for BraidLetter {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = serializer.serialize_tuple(2)?;
        t.serialize_element(&self.index)?;
        t.serialize_element(self.kind_tag())?;
        t.end()
    }
}

/// A word in the generators of `B_n`, possibly containing singular letters.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BraidWord {
    n: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<BraidLetter>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoStrands);
        }
        for l in &letters {
            if l.index == 0 {
                return Err(Error::IndexZero);
            }
            if l.index >= n {
                return Err(Error::IndexOutOfRange { index: l.index, n });
            }
        }
        Ok(BraidWord { n, letters })
    }

    pub fn empty(n: usize) -> Self {
        BraidWord { n: n.max(1), letters: Vec::new() }
    }

    /// Signed generator indices, `-i` for `σ_i^-1`.
    pub fn from_ints(n: usize, ints: &[i64]) -> Result<Self> {
        let letters = ints
            .iter()
            .map(|&v| match v {
                0 => Err(Error::IndexZero),
                v if v > 0 => Ok(BraidLetter::pos(v as usize)),
                v => Ok(BraidLetter::neg(v.unsigned_abs() as usize)),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, letters)
    }

    pub(crate) fn from_parts_unchecked(n: usize, letters: Vec<BraidLetter>) -> Self {
        debug_assert!(letters.iter().all(|l| l.index >= 1 && l.index < n));
        BraidWord { n, letters }
    }

    /// Braid index (strand count).
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn has_singular(&self) -> bool {
        self.letters.iter().any(BraidLetter::is_singular)
    }

    pub fn singular_count(&self) -> usize {
        self.letters.iter().filter(|l| l.is_singular()).count()
    }

    /// Signed indices; `None` if a singular letter is present.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.letters.iter().map(|l| l.sign().map(|s| s as i64 * l.index as i64)).collect()
    }

    /// The same letters read in `B_m`, `m >= n` (extra trivial strands on the right).
    pub fn embed(&self, m: usize) -> Result<Self> {
        if m < self.n {
            return Self::new(m, self.letters.clone());
        }
        Ok(BraidWord { n: m, letters: self.letters.clone() })
    }

    /// Concatenation; the result lives in the larger of the two braid groups.
    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { n: self.n.max(other.n), letters }
    }

    pub fn push(&mut self, letter: BraidLetter) -> Result<()> {
        if letter.index == 0 {
            return Err(Error::IndexZero);
        }
        if letter.index >= self.n {
            return Err(Error::IndexOutOfRange { index: letter.index, n: self.n });
        }
        self.letters.push(letter);
        Ok(())
    }

    /// Group inverse; fails on singular letters.
    pub fn inverse(&self) -> Result<Self> {
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|l| l.inverse().ok_or(Error::SingularLetter))
            .collect::<Result<Vec<_>>>()?;
        Ok(BraidWord { n: self.n, letters })
    }

    /// Associated permutation; a singular letter `τ_i` contributes the transposition `s_i`.
    pub fn permutation(&self) -> Permutation {
        let mut pos: Vec<usize> = (1..=self.n).collect();
        // pos[k] tracks where the strand that started at k+1 currently sits.
        let mut at: Vec<usize> = (0..self.n).collect(); // at[position-1] = strand
        for l in &self.letters {
            at.swap(l.index - 1, l.index);
        }
        for (position, &strand) in at.iter().enumerate() {
            pos[strand] = position + 1;
        }
        Permutation::from_images(&pos).expect("braid permutation is a bijection")
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> Result<i64> {
        self.letters.iter().map(|l| l.sign().map(i64::from).ok_or(Error::SingularLetter)).sum()
    }

    /// True iff the closure has one component.
    pub fn is_knot(&self) -> bool {
        self.permutation().is_full_cycle()
    }

    pub(crate) fn require_knot(&self) -> Result<()> {
        let p = self.permutation();
        if p.is_full_cycle() {
            Ok(())
        } else {
            Err(Error::NotAKnot { cycle_type: p.cycle_type() })
        }
    }

    pub(crate) fn require_nonsingular(&self) -> Result<()> {
        if self.has_singular() {
            Err(Error::SingularLetter)
        } else {
            Ok(())
        }
    }

    /// Text form without the header: `3 2 1 -4 S2`; empty words render as `e`.
    pub fn letters_string(&self) -> String {
        if self.letters.is_empty() {
            return "e".to_string();
        }
        self.letters.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
    }
}

/// Parses `"n=4; 3 2 1 -4"`; see [`BraidWord::from_str`].
pub fn parse_braid(text: &str) -> Result<BraidWord> {
    text.parse()
}

pub fn permutation_of(w: &BraidWord) -> Permutation {
    w.permutation()
}

pub fn writhe(w: &BraidWord) -> Result<i64> {
    w.writhe()
}

pub fn is_knot(w: &BraidWord) -> bool {
    w.is_knot()
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Optional `n=<int>;` header, then whitespace- or comma-separated nonzero integers
    /// (sign is the crossing sign) or singular letters `S<int>`. Without a header the braid
    /// index is one more than the largest generator index.
    fn from_str(text: &str) -> Result<Self> {
        let mut body = text.trim();
        let mut declared = None;
        if let Some(rest) = body.strip_prefix("n") {
            let rest = rest.trim_start();
            if let Some(rest) = rest.strip_prefix('=') {
                let (num, tail) = match rest.find(';') {
                    Some(k) => (&rest[..k], &rest[k + 1..]),
                    None => (rest, ""),
                };
                let n: usize =
                    num.trim().parse().map_err(|_| Error::MalformedToken(num.trim().to_string()))?;
                declared = Some(n);
                body = tail;
            }
        }
        let mut letters = Vec::new();
        for token in body.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let letter = if let Some(idx) = token.strip_prefix(['S', 's']) {
                let i: usize = idx.parse().map_err(|_| Error::MalformedToken(token.to_string()))?;
                if i == 0 {
                    return Err(Error::IndexZero);
                }
                BraidLetter::singular(i)
            } else {
                let v: i64 = token.parse().map_err(|_| Error::MalformedToken(token.to_string()))?;
                match v {
                    0 => return Err(Error::IndexZero),
                    v if v > 0 => BraidLetter::pos(v as usize),
                    v => BraidLetter::neg(v.unsigned_abs() as usize),
                }
            };
            letters.push(letter);
        }
        let n = declared.unwrap_or_else(|| letters.iter().map(|l| l.index + 1).max().unwrap_or(1));
        BraidWord::new(n, letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={};", self.n)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

impl Serialize for BraidWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("BraidWord", 2)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("letters", &self.letters)?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_infers_index() {
        let w = parse_braid("1 1 1").unwrap();
        assert_eq!(w.n(), 2);
        assert_eq!(w.to_ints().unwrap(), vec![1, 1, 1]);
    }

    #[test]
    fn parse_example_one_word() {
        let w = parse_braid("3 2 1 -4 3 2 1 4").unwrap();
        assert_eq!(w.n(), 5);
        assert_eq!(w.letters()[3], BraidLetter::neg(4));
    }

    #[test]
    fn parse_with_header_and_commas() {
        let w = parse_braid("n=4; 1 -1").unwrap();
        assert_eq!(w.n(), 4);
        assert_eq!(w.len(), 2);
        let w = parse_braid("n = 3 ; 1,-2, S1").unwrap();
        assert_eq!(w.letters()[2], BraidLetter::singular(1));
        assert_eq!(parse_braid("").unwrap(), BraidWord::empty(1));
        assert_eq!(parse_braid("n=3;").unwrap(), BraidWord::empty(3));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_braid("1 x 2"), Err(Error::MalformedToken("x".into())));
        assert_eq!(parse_braid("1 0"), Err(Error::IndexZero));
        assert_eq!(parse_braid("n=3; 3"), Err(Error::IndexOutOfRange { index: 3, n: 3 }));
        assert_eq!(parse_braid("n=0;"), Err(Error::NoStrands));
        assert!(parse_braid("n=q; 1").is_err());
        assert_eq!(parse_braid("S0"), Err(Error::IndexZero));
    }

    #[test]
    fn display_round_trips() {
        let w = parse_braid("n=5; 3 2 -1 S4").unwrap();
        assert_eq!(w.to_string(), "n=5; 3 2 -1 S4");
        assert_eq!(w.to_string().parse::<BraidWord>().unwrap(), w);
    }

    #[test]
    fn json_shape() {
        let w = parse_braid("n=3; 1 -2 S1").unwrap();
        assert_eq!(
            serde_json::to_value(&w).unwrap(),
            serde_json::json!({"n": 3, "letters": [[1, "+"], [2, "-"], [1, "s"]]})
        );
    }

    #[test]
    fn permutation_examples() {
        let x = BraidWord::from_ints(5, &[3, 2, 1]).unwrap();
        assert_eq!(x.permutation().to_string(), "(1 2 3 4)");
        assert!(BraidWord::empty(4).permutation().is_identity());
        let b1 = BraidWord::from_ints(5, &[3, 2, 1, -4, 2, 1, 3, 4]).unwrap();
        assert_eq!(b1.permutation(), Permutation::from_cycles(5, &[vec![1, 5, 3, 4, 2]]).unwrap());
    }

    #[test]
    fn writhe_examples() {
        assert_eq!(parse_braid("1 1 1").unwrap().writhe().unwrap(), 3);
        assert_eq!(parse_braid("3 2 1 -4 2 1 3 4").unwrap().writhe().unwrap(), 6);
        assert_eq!(parse_braid("1 -1").unwrap().writhe().unwrap(), 0);
        assert_eq!(parse_braid("S1").unwrap().writhe(), Err(Error::SingularLetter));
    }

    #[test]
    fn knot_examples() {
        assert!(parse_braid("1 1 1").unwrap().is_knot());
        assert!(!parse_braid("1 1").unwrap().is_knot());
        assert!(parse_braid("3 2 1 -4 3 2 1 4").unwrap().is_knot());
        assert!(BraidWord::empty(1).is_knot());
    }

    #[test]
    fn inverse_cancels_permutation() {
        let w = parse_braid("1 -2 3 2").unwrap();
        let inv = w.inverse().unwrap();
        assert!(w.concat(&inv).permutation().is_identity());
        assert_eq!(parse_braid("S1").unwrap().inverse(), Err(Error::SingularLetter));
    }
}
