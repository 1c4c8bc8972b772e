//! Exact conjugacy-class invariants of closed braids.
//!
//! The Fiedler polynomial and the Temperley–Lieb trace invariants `Q_{β,k}` are computed
//! over exact integers and rationals, together with the cycle calculus that predicts when
//! they separate exchange-related braids.

pub mod algebra;
pub mod braid;
pub mod error;
pub mod fiedler;
pub mod permcalc;
pub mod qinv;
pub mod tl;

pub use error::{Error, Result};
