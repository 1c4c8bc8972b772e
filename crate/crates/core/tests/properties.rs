mod common;

use braidinv::algebra::{exp_substitute, BiLaurent, LaurentPoly};
use braidinv::braid::{
    apply_braid_relation, conjugate, cyclic_rotate, destabilize, exchange_pair, free_reduce, stabilize, BraidWord,
    Permutation,
};
use braidinv::fiedler::{exchange_difference_from_windings, exchange_fiedler_difference, exchange_windings, fiedler_poly};
use braidinv::permcalc::{direct_full_cycle_product, intersection_order, is_full_cycle_product, Cycle};
use braidinv::tl::{phi, tl_mul, trace_of_braid};
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..=6, -9i64..=9), 0..5).prop_map(|t| LaurentPoly::from_i64('a', &t))
}

fn bilaurent() -> impl Strategy<Value = BiLaurent> {
    prop::collection::vec((-5i64..=5, -3i64..=3, -9i64..=9), 0..5).prop_map(|t| BiLaurent::from_i64(&t))
}

fn word(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((1..n as i64, any::<bool>()), 0..=max_len).prop_map(move |ls| {
            let ints: Vec<i64> = ls.into_iter().map(|(i, s)| if s { i } else { -i }).collect();
            BraidWord::from_ints(n, &ints).unwrap()
        })
    })
}

fn knot(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    word(max_n, max_len).prop_filter("closure is a knot", |w| w.is_knot())
}

/// A cycle on a random subset of `1..=n` in random order.
fn cycle(n: usize) -> impl Strategy<Value = Cycle> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_flat_map(move |digits| (Just(digits), 1..=n))
        .prop_map(|(digits, len)| Cycle::new(digits[..len].to_vec()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, max_global_rejects: 200_000, ..ProptestConfig::default() })]

    #[test]
    fn laurent_ring_axioms(p in laurent(), q in laurent(), r in laurent()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(p.invert_var().invert_var(), p.clone());
    }

    #[test]
    fn bilaurent_ring_axioms(p in bilaurent(), q in bilaurent(), r in bilaurent()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p * &q, &q * &p);
    }

    #[test]
    fn exp_substitution_is_a_ring_map(p in bilaurent(), q in bilaurent()) {
        let order = 4;
        let (sp, sq) = (exp_substitute(&p, order), exp_substitute(&q, order));
        prop_assert_eq!(exp_substitute(&(&p * &q), order), sp.mul(&sq));
        prop_assert_eq!(exp_substitute(&(&p + &q), order), sp.add(&sq));
    }

    #[test]
    fn exact_division_recovers_factor(p in laurent(), q in laurent()) {
        prop_assume!(!q.is_zero());
        prop_assert_eq!((&p * &q).div_exact(&q), Some(p));
    }

    #[test]
    fn permutation_is_a_homomorphism(u in word(6, 8), v in word(6, 8)) {
        let n = u.n().max(v.n());
        let (u, v) = (u.embed(n).unwrap(), v.embed(n).unwrap());
        prop_assert_eq!(u.concat(&v).permutation(), u.permutation().then(&v.permutation()));
        prop_assert!(u.concat(&u.inverse().unwrap()).permutation().is_identity());
        prop_assert_eq!(u.inverse().unwrap().permutation(), u.permutation().inverse());
    }

    #[test]
    fn moves_preserve_the_conjugacy_class(w in word(6, 10), k in 0usize..12, g in word(6, 3), p in 1usize..10) {
        let ty = w.permutation().cycle_type();
        prop_assert_eq!(cyclic_rotate(&w, k % (w.len() + 1)).permutation().cycle_type(), ty.clone());
        prop_assert_eq!(free_reduce(&w).permutation(), w.permutation());
        if let Ok(g) = g.embed(w.n().max(g.n())) {
            if g.n() == w.n() {
                prop_assert_eq!(conjugate(&w, &g).unwrap().permutation().cycle_type(), ty.clone());
            }
        }
        if p < w.len() {
            if let Ok(m) = apply_braid_relation(&w, p) {
                prop_assert_eq!(m.permutation(), w.permutation());
                prop_assert_eq!(m.len(), w.len());
            }
        }
    }

    #[test]
    fn markov_moves_keep_knots_and_invariants(w in knot(5, 8), positive in any::<bool>()) {
        let s = stabilize(&w, if positive { 1 } else { -1 });
        prop_assert_eq!(s.n(), w.n() + 1);
        prop_assert!(s.is_knot());
        prop_assert_eq!(destabilize(&s).unwrap(), w.clone());
        let f = fiedler_poly(&w).unwrap();
        let fs = fiedler_poly(&s).unwrap();
        // Fiedler's polynomial is not stabilization invariant, but its value at 1 is the writhe.
        prop_assert_eq!(fs.sum_coeffs(), f.sum_coeffs() + if positive { 1 } else { -1 });
    }

    #[test]
    fn phi_respects_concatenation(u in word(5, 6), v in word(5, 6)) {
        prop_assume!(u.n() == v.n());
        let lhs = phi(&u.concat(&v)).unwrap();
        prop_assert_eq!(lhs, tl_mul(&phi(&u).unwrap(), &phi(&v).unwrap()).unwrap());
    }

    #[test]
    fn trace_is_a_conjugacy_invariant(w in word(5, 7), g in word(5, 3)) {
        prop_assume!(w.n() == g.n());
        prop_assert_eq!(trace_of_braid(&conjugate(&w, &g).unwrap()).unwrap(), trace_of_braid(&w).unwrap());
    }

    #[test]
    fn exchange_pair_invariants(x in word(5, 6), y in word(5, 6)) {
        prop_assume!(x.n() == y.n());
        let p = exchange_pair(&x, &y).unwrap();
        prop_assert_eq!(p.beta1().permutation(), p.beta2().permutation());
        prop_assert_eq!(p.beta1().writhe().unwrap(), p.beta2().writhe().unwrap());
        prop_assert_eq!(p.beta1().n(), x.n() + 1);
        if p.beta1().is_knot() {
            let (m1, m2) = exchange_windings(&p).unwrap();
            prop_assert_eq!(
                exchange_fiedler_difference(&p).unwrap(),
                exchange_difference_from_windings(m1, m2, p.n() + 1).unwrap()
            );
        }
    }

    #[test]
    fn full_cycle_products_have_odd_overlap(a in cycle(8), b in cycle(8)) {
        let covering = (1..=8).all(|d| a.contains(d) || b.contains(d));
        prop_assume!(covering && (1..=8).any(|d| a.contains(d) && b.contains(d)));
        let direct = direct_full_cycle_product(&a, &b).unwrap();
        let order = intersection_order(&a, &b).unwrap();
        if direct {
            prop_assert!(order.support.len() % 2 == 1);
        }
        // The ordering criterion is only evaluated for error handling here; it is not
        // equivalent to the product being a full cycle in either direction.
        let _ = is_full_cycle_product(&a, &b).unwrap();
        let product = a.to_permutation(8).then(&b.to_permutation(8));
        prop_assert_eq!(direct, product.is_full_cycle());
    }
}

#[test]
fn permutation_display_round_trip() {
    let p = Permutation::from_cycles(6, &[vec![1, 4, 2], vec![5, 6]]).unwrap();
    assert_eq!(p.to_string(), "(1 4 2)(5 6)");
    assert_eq!(Permutation::identity(3).to_string(), "()");
}
