//! Helpers shared by the integration tests: random words and an independent state-sum
//! evaluation of `f∘Φ` that never touches the Temperley–Lieb multiplication code.

#![allow(dead_code)]

use braidinv::algebra::{BiLaurent, LaurentPoly};
use braidinv::braid::{BraidLetter, BraidWord, LetterKind};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn w(n: usize, ints: &[i64]) -> BraidWord {
    BraidWord::from_ints(n, ints).unwrap()
}

pub fn random_word(rng: &mut ChaCha8Rng, n: usize, len: usize) -> BraidWord {
    let letters = (0..len)
        .map(|_| BraidLetter::with_sign(rng.gen_range(1..n), if rng.gen_bool(0.5) { 1 } else { -1 }))
        .collect();
    BraidWord::new(n, letters).unwrap()
}

pub fn random_positive_word(rng: &mut ChaCha8Rng, n: usize, len: usize) -> BraidWord {
    let letters = (0..len).map(|_| BraidLetter::pos(rng.gen_range(1..n))).collect();
    BraidWord::new(n, letters).unwrap()
}

/// Draws words until one closes to a knot.
pub fn random_knot(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> BraidWord {
    loop {
        let len = rng.gen_range(n - 1..=max_len.max(n - 1));
        let b = random_word(rng, n, len);
        if b.is_knot() {
            return b;
        }
    }
}

pub fn random_positive_knot(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> BraidWord {
    loop {
        let len = rng.gen_range(n - 1..=max_len.max(n - 1));
        let b = random_positive_word(rng, n, len);
        if b.is_knot() {
            return b;
        }
    }
}

fn d() -> LaurentPoly {
    LaurentPoly::from_i64('a', &[(2, -1), (-2, -1)])
}

/// `f∘Φ` by summing over all `2^c` smoothings of the closed braid drawn in the annulus.
///
/// Each crossing is smoothed either vertically (weight `a^ε`) or horizontally (weight
/// `a^-ε`); singular letters contribute the difference of the two crossings. Every
/// resulting curve is classified by its winding number around the axis.
pub fn state_sum(b: &BraidWord) -> BiLaurent {
    let n = b.n();
    let c = b.len();
    // Node (level, pos) is id level * n + pos, levels 0..=c, pos 0..n.
    let id = |level: usize, pos: usize| level * n + pos;
    let mut total = BiLaurent::zero();
    for mask in 0u64..(1u64 << c) {
        let mut weight = LaurentPoly::one('a');
        // Edges (u, v, winding from u to v); every node meets exactly two of them.
        let mut edges: Vec<(usize, usize, i64)> = Vec::new();
        for (l, letter) in b.letters().iter().enumerate() {
            let horizontal = mask >> l & 1 == 1;
            let (vertical_w, horizontal_w) = match letter.kind {
                LetterKind::Positive => (LaurentPoly::var_pow('a', 1), LaurentPoly::var_pow('a', -1)),
                LetterKind::Negative => (LaurentPoly::var_pow('a', -1), LaurentPoly::var_pow('a', 1)),
                LetterKind::Singular => {
                    let t = LaurentPoly::from_i64('a', &[(-1, 1), (1, -1)]);
                    (-&t, t)
                }
            };
            weight = &weight * &(if horizontal { horizontal_w } else { vertical_w });
            let i = letter.index - 1;
            for p in 0..n {
                if horizontal && (p == i || p == i + 1) {
                    continue;
                }
                edges.push((id(l, p), id(l + 1, p), 0));
            }
            if horizontal {
                edges.push((id(l, i), id(l, i + 1), 0));
                edges.push((id(l + 1, i), id(l + 1, i + 1), 0));
            }
        }
        for p in 0..n {
            // Closure arc from the bottom back to the top, once around the axis.
            edges.push((id(c, p), id(0, p), 1));
        }
        if weight.is_zero() {
            continue;
        }
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); (c + 1) * n];
        for (k, &(u, v, _)) in edges.iter().enumerate() {
            incident[u].push(k);
            incident[v].push(k);
        }
        let (mut contractible, mut essential) = (0u32, 0i64);
        let mut used = vec![false; edges.len()];
        for first in 0..edges.len() {
            if used[first] {
                continue;
            }
            let mut winding = 0;
            let (mut edge, mut node) = (first, edges[first].0);
            loop {
                used[edge] = true;
                let (u, v, wind) = edges[edge];
                let next = if node == u {
                    winding += wind;
                    v
                } else {
                    winding -= wind;
                    u
                };
                node = next;
                let Some(&other) = incident[node].iter().find(|&&k| k != edge && !used[k]) else {
                    break;
                };
                edge = other;
            }
            if winding == 0 {
                contractible += 1;
            } else {
                essential += 1;
            }
        }
        let scalar = &weight * &d().pow(contractible);
        total = &total + &BiLaurent::from_a_poly(&scalar, essential);
    }
    total
}

/// Evaluates `f` at `x = d`, forgetting the axis.
pub fn forget_axis(f: &BiLaurent) -> LaurentPoly {
    f.substitute_x(&d())
}

/// A random word whose length is drawn from `lens`.
pub fn random_word_in<R: rand::distributions::uniform::SampleRange<usize>>(
    rng: &mut ChaCha8Rng,
    n: usize,
    lens: R,
) -> BraidWord {
    let len = rng.gen_range(lens);
    random_word(rng, n, len)
}
