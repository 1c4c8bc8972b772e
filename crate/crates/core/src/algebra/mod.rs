//! Exact scalar arithmetic: sparse Laurent polynomials in one variable, integer
//! polynomials in `(a, x)`, and truncated series in `t` obtained by `a = e^t`.

mod bilaurent;
mod laurent;
mod series;

pub use bilaurent::BiLaurent;
pub use laurent::{laurent_mul, symmetric_pair, Coefficient, Laurent, LaurentPoly, RationalPoly};
pub use series::{exp_substitute, exp_substitute_a, TruncatedSeries};
