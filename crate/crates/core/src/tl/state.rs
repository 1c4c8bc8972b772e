use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A planar matching of the `2n` boundary points of a TL diagram.
///
/// Points are numbered `1..=n` along the top and `n+1..=2n` along the bottom, both left
/// to right. Internally `partner[p]` is the 0-based point joined to `p`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct TLState {
    n: usize,
    partner: Vec<usize>,
}

/// Position around the boundary circle: top left to right, then bottom right to left.
fn circular(n: usize, p: usize) -> usize {
    if p < n {
        p
    } else {
        3 * n - 1 - p
    }
}

impl TLState {
    pub fn identity(n: usize) -> Self {
        let mut partner = vec![0; 2 * n];
        for k in 0..n {
            partner[k] = n + k;
            partner[n + k] = k;
        }
        TLState { n, partner }
    }

    /// `e_i`: top `i`–`i+1` cap, bottom `i`–`i+1` cup, other strands straight.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        let mut s = Self::identity(n);
        let (a, b) = (i - 1, i);
        s.partner[a] = b;
        s.partner[b] = a;
        s.partner[n + a] = n + b;
        s.partner[n + b] = n + a;
        Ok(s)
    }

    /// Builds a state from 1-based chord pairs, checking it is a planar perfect matching.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut partner = vec![usize::MAX; 2 * n];
        if pairs.len() != n {
            return Err(Error::InvalidState(format!("{} chords for {n} strands", pairs.len())));
        }
        for &(a, b) in pairs {
            if a == 0 || b == 0 || a > 2 * n || b > 2 * n || a == b {
                return Err(Error::InvalidState(format!("chord ({a},{b}) out of range")));
            }
            let (a, b) = (a - 1, b - 1);
            if partner[a] != usize::MAX || partner[b] != usize::MAX {
                return Err(Error::InvalidState("point used twice".into()));
            }
            partner[a] = b;
            partner[b] = a;
        }
        let s = TLState { n, partner };
        if !s.is_planar() {
            return Err(Error::InvalidState("chords cross".into()));
        }
        Ok(s)
    }

    fn is_planar(&self) -> bool {
        let chords = self.chords0();
        for (k, &(a, b)) in chords.iter().enumerate() {
            let (a, b) = ordered(circular(self.n, a), circular(self.n, b));
            for &(c, d) in &chords[k + 1..] {
                let (c, d) = (circular(self.n, c), circular(self.n, d));
                if (a < c && c < b) != (a < d && d < b) {
                    return false;
                }
            }
        }
        true
    }

    fn chords0(&self) -> Vec<(usize, usize)> {
        (0..2 * self.n).filter(|&p| p < self.partner[p]).map(|p| (p, self.partner[p])).collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Canonical encoding: 1-based pairs, smaller endpoint first, sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.chords0().into_iter().map(|(a, b)| (a + 1, b + 1)).collect()
    }

    /// 0-based partner of 0-based point `p`.
    pub fn partner(&self, p: usize) -> usize {
        self.partner[p]
    }

    /// Number of chords joining top to bottom.
    pub fn through_strands(&self) -> usize {
        (0..self.n).filter(|&p| self.partner[p] >= self.n).count()
    }

    /// Stacks `self` above `other`; returns the product state and the number of closed loops.
    pub fn compose(&self, other: &Self) -> Result<(TLState, usize)> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        let n = self.n;
        // Outer points: 0..n are self's top, n..2n are other's bottom.
        let mut partner = vec![0; 2 * n];
        let mut middle_seen = vec![false; n];
        for start in 0..2 * n {
            // Walk from an outer point until another outer point is reached.
            let (mut in_top, mut p) = if start < n { (true, start) } else { (false, start) };
            loop {
                let q = if in_top { self.partner[p] } else { other.partner[p] };
                if in_top && q < n {
                    partner[start] = q;
                    break;
                }
                if !in_top && q >= n {
                    partner[start] = q;
                    break;
                }
                // q lies on the middle line.
                let m = if in_top { q - n } else { q };
                middle_seen[m] = true;
                if in_top {
                    in_top = false;
                    p = m;
                } else {
                    in_top = true;
                    p = n + m;
                }
            }
        }
        let mut loops = 0;
        for m0 in 0..n {
            if middle_seen[m0] {
                continue;
            }
            loops += 1;
            let mut m = m0;
            loop {
                middle_seen[m] = true;
                let below = other.partner[m]; // stays on the middle line
                middle_seen[below] = true;
                let above = self.partner[n + below] - n;
                if above == m0 {
                    break;
                }
                m = above;
            }
        }
        Ok((TLState { n, partner }, loops))
    }

    /// Components of the annular closure (top `k` joined to bottom `k` around the axis):
    /// `(contractible, non-contractible)`. A component is non-contractible exactly when its
    /// closure arcs give it non-zero winding number around the axis.
    pub fn closure_components(&self) -> (usize, usize) {
        let n = self.n;
        let mut seen = vec![false; 2 * n];
        let (mut p_count, mut q_count) = (0, 0);
        for start in 0..2 * n {
            if seen[start] {
                continue;
            }
            let mut winding: i64 = 0;
            let mut p = start;
            loop {
                seen[p] = true;
                let q = self.partner[p];
                seen[q] = true;
                // Leave q along its closure arc.
                let next = if q < n {
                    winding -= 1; // top to bottom
                    q + n
                } else {
                    winding += 1; // bottom to top
                    q - n
                };
                p = next;
                if p == start {
                    break;
                }
            }
            if winding == 0 {
                p_count += 1;
            } else {
                q_count += 1;
            }
        }
        (p_count, q_count)
    }

    /// All planar matchings on `2n` points, in canonical order; there are `Catalan(n)`.
    pub fn enumerate(n: usize) -> Vec<TLState> {
        // Match points on the boundary circle, then translate back.
        fn rec(points: &[usize]) -> Vec<Vec<(usize, usize)>> {
            if points.is_empty() {
                return vec![Vec::new()];
            }
            let mut out = Vec::new();
            for k in (1..points.len()).step_by(2) {
                let inner = rec(&points[1..k]);
                let outer = rec(&points[k + 1..]);
                for i in &inner {
                    for o in &outer {
                        let mut chords = vec![(points[0], points[k])];
                        chords.extend_from_slice(i);
                        chords.extend_from_slice(o);
                        out.push(chords);
                    }
                }
            }
            out
        }
        let circle: Vec<usize> = (0..2 * n).collect();
        let raw = rec(&circle);
        let from_circular = |c: usize| if c < n { c } else { 3 * n - 1 - c };
        let mut states: Vec<TLState> = raw
            .into_iter()
            .map(|chords| {
                let mut partner = vec![0; 2 * n];
                for (a, b) in chords {
                    let (a, b) = (from_circular(a), from_circular(b));
                    partner[a] = b;
                    partner[b] = a;
                }
                TLState { n, partner }
            })
            .collect();
        states.sort();
        states.dedup();
        states
    }
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

impl fmt::Display for TLState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.pairs().iter().map(|(a, b)| format!("{a}-{b}")).collect();
        write!(f, "[{}]", body.join(" "))
    }
}

impl Serialize for TLState {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.pairs().serialize(serializer)
    }
}
