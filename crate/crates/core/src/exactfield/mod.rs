//! Exact arithmetic: rationals, algebraic field towers, dense polynomials.

mod poly;
mod rational;
mod tower;

pub use poly::{Poly, KARATSUBA_THRESHOLD};
pub(crate) use poly::mul_coeffs;
pub use rational::{fmt_rational, int, is_nonpositive_integer, rat, rat_pow, to_i64, Rational};
pub use tower::{FieldElement, FieldTower};
