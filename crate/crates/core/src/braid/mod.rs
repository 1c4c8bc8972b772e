//! Braid words, the permutation homomorphism and the Markov/exchange move set.

mod exchange;
pub mod families;
pub mod morton;
mod moves;
mod permutation;
mod word;

pub use exchange::{exchange_pair, triviality_filters, ExchangePair, TrivialityReport};
pub use moves::{
    apply_braid_relation, apply_move, conjugate, cyclic_free_reduce, cyclic_rotate, destabilize,
    exchange_move, free_reduce, stabilize, Move,
};
pub use permutation::Permutation;
pub use word::{is_knot, parse_braid, permutation_of, writhe, BraidLetter, BraidWord, LetterKind};
