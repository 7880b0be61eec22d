//! Arbitrary-precision rationals.
//!
//! `BigRational` already keeps every value reduced with a positive
//! denominator, so it is used directly.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// `n/d` as a reduced rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Formats as `p` or `p/q`.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Integer value of `r` if it is an integer that fits an `i64`.
pub fn to_i64(r: &Rational) -> Option<i64> {
    use num_traits::ToPrimitive;
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}

pub fn is_nonpositive_integer(r: &Rational) -> bool {
    r.is_integer() && (r.is_zero() || r.is_negative())
}

/// `r^k` for a (possibly negative) integer exponent. Panics on `0^k`, `k < 0`.
pub fn rat_pow(r: &Rational, k: i64) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..k.unsigned_abs() {
        acc *= r;
    }
    if k < 0 {
        acc.recip()
    } else {
        acc
    }
}
