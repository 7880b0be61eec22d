//! Truncated power series and radical series `c·x^μ·(1 + …)`.

mod radical;
mod trunc;

pub use radical::{Comparison, Mismatch, RadicalSeries};
pub use trunc::TruncSeries;

use crate::error::{Error, Result};
use crate::exactfield::{FieldElement, Poly, Rational};

/// Laurent expansion of `num/den` at 0 as `scale·x^offset·unit`, unit to order `n`.
pub fn expand_ratmap(num: &Poly, den: &Poly, n: usize) -> Result<RadicalSeries> {
    let vd = den.valuation().ok_or(Error::ZeroPolynomial)?;
    let field = num.field().common(den.field()).ok_or_else(|| Error::TowerMismatch {
        left: num.field().to_string(),
        right: den.field().to_string(),
    })?;
    let Some(vn) = num.valuation() else {
        return Ok(RadicalSeries::zero(&field, Rational::from_integer(0.into()), n));
    };
    let num = TruncSeries::new(&field, num.coeffs()[vn..].to_vec());
    let den = TruncSeries::new(&field, den.coeffs()[vd..].to_vec());
    let pad = |s: TruncSeries| {
        let mut c: Vec<FieldElement> = s.coeffs().to_vec();
        c.resize(n, field.zero());
        c.truncate(n);
        TruncSeries::new(&field, c)
    };
    let q = pad(num).checked_div(&pad(den))?;
    let r = RadicalSeries::from_series(&q);
    Ok(r.shift(&Rational::from_integer((vn as i64 - vd as i64).into())))
}

/// Taylor coefficients of `p(x0 + t)` in `t`, to order `n`.
pub fn shift_expand(p: &Poly, x0: &FieldElement, n: usize) -> Result<TruncSeries> {
    Ok(TruncSeries::from_poly(&p.taylor_shift(x0)?, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{int, rat, FieldTower};
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    fn q() -> FieldTower {
        FieldTower::rationals()
    }

    fn ser(c: &[Rational], n: usize) -> TruncSeries {
        let mut v = c.to_vec();
        v.resize(n, Rational::zero());
        TruncSeries::from_rationals(&q(), &v)
    }

    fn rationals_of(s: &TruncSeries) -> Vec<Rational> {
        s.coeffs().iter().map(|c| c.as_rational().unwrap()).collect()
    }

    #[test]
    fn arithmetic_basics() {
        let a = ser(&[int(1), int(1)], 6);
        let b = ser(&[int(1), int(-1)], 6);
        assert_eq!(rationals_of(&(&a * &b)), ser(&[int(1), int(0), int(-1)], 6).coeffs().iter().map(|c| c.as_rational().unwrap()).collect::<Vec<_>>());
        let geo = b.inv().unwrap();
        assert!(geo.coeffs().iter().all(|c| c.is_one()));
        let p3 = ser(&[int(1), int(-1), int(0), rat(1, 7)], 8);
        let inv = ser(&[int(1)], 8).checked_div(&p3).unwrap();
        assert_eq!(&rationals_of(&inv)[..4], &[int(1), int(1), int(1), rat(6, 7)]);
        let x = TruncSeries::x(&q(), 5);
        assert!(matches!(x.inv(), Err(Error::Valuation { valuation: 1 })));
    }

    #[test]
    fn mixed_orders_truncate_to_minimum() {
        let a = ser(&[int(1), int(2)], 4);
        let b = ser(&[int(3)], 7);
        assert_eq!((&a + &b).order(), 4);
        assert_eq!((&a * &b).order(), 4);
    }

    #[test]
    fn composition() {
        let f = ser(&[int(2), int(-3), rat(1, 5), int(7)], 10);
        let x = TruncSeries::x(&q(), 10);
        assert_eq!(f.compose(&x).unwrap(), f);
        let geo = ser(&[int(1), int(-1)], 10).inv().unwrap();
        let x2 = ser(&[int(0), int(0), int(1)], 10);
        let r = geo.compose(&x2).unwrap();
        for (k, c) in r.coeffs().iter().enumerate() {
            assert_eq!(c.is_one(), k % 2 == 0);
        }
        let one_plus_x = ser(&[int(1), int(1)], 10);
        assert!(matches!(f.compose(&one_plus_x), Err(Error::Composition)));
        // valuation 3 inner argument keeps the constant term alone
        let g = ser(&[int(0), int(0), int(0), int(5), int(1)], 12);
        let h = ser(&[int(1), int(9), int(9)], 12).compose(&g).unwrap();
        assert_eq!(&rationals_of(&h)[..3], &[int(1), int(0), int(0)]);
    }

    fn binomial_series(e: &Rational, a: &Rational, n: usize) -> Vec<Rational> {
        let mut out = vec![Rational::one()];
        let mut c = Rational::one();
        for k in 1..n {
            c = c * (e - int(k as i64 - 1)) / int(k as i64) * a;
            out.push(c.clone());
        }
        out
    }

    #[test]
    fn square_roots() {
        let f = ser(&[int(1), rat(-2, 3)], 12);
        let g = f.ratpow(&rat(1, 2)).unwrap();
        assert_eq!(rationals_of(&g), binomial_series(&rat(1, 2), &rat(-2, 3), 12));
        assert_eq!(&rationals_of(&g)[..3], &[int(1), rat(-1, 3), rat(-1, 18)]);
        let h = ser(&[int(1), int(1)], 9).ratpow(&rat(1, 2)).unwrap();
        assert_eq!(&h * &h, ser(&[int(1), int(1)], 9));
        let z = f.ratpow(&Rational::zero()).unwrap();
        assert_eq!(z, TruncSeries::one(&q(), 12));
        let bad = ser(&[int(2), int(1)], 4);
        assert!(matches!(bad.ratpow(&rat(1, 2)), Err(Error::Normalization { .. })));
        let four = bad.ratpow_with_constant(&rat(2, 1), &q().from_int(4)).unwrap();
        assert_eq!(four, &bad * &bad);
        assert!(bad.ratpow_with_constant(&rat(1, 2), &q().from_int(2)).is_err());
    }

    #[test]
    fn rational_map_expansion() {
        let num = Poly::from_ints(&[0, 1]);
        let den = Poly::from_ints(&[1, -1]);
        let r = expand_ratmap(&num, &den, 8).unwrap();
        assert_eq!(r.offset(), &int(1));
        assert!(r.scale().is_one());
        assert!(r.unit().coeffs().iter().all(|c| c.is_one()));
        let z = Poly::zero(&q());
        assert!(matches!(expand_ratmap(&num, &z, 8), Err(Error::ZeroPolynomial)));
        let inv = expand_ratmap(&den, &num, 8).unwrap();
        assert_eq!(inv.offset(), &int(-1));
    }

    #[test]
    fn degree_four_map_leading_term() {
        let f = |c: &[i64]| Poly::from_ints(c);
        let num = &(&(&f(&[0, 1]) * &f(&[56, -21, 2]).pow(2)) * &f(&[-28, 0, 1]).pow(4))
            * &f(&[14, -7, 1]).pow(4);
        let den = f(&[-56, 56, -14, 1]).pow(7).scale_rational(&int(4));
        let r = expand_ratmap(&num, &den, 10).unwrap();
        assert_eq!(r.offset(), &int(1));
        // leading coefficients of numerator and denominator, evaluated directly
        let lead = Rational::from_integer(56i64.pow(2).into())
            * int(28i64.pow(4))
            * int(14i64.pow(4))
            / (int(4) * int((-56i64).pow(7)));
        assert_eq!(r.scale().as_rational(), Some(lead.clone()));
        assert_eq!(lead, rat(-343, 32));
    }

    #[test]
    fn shifted_expansions() {
        let p3 = Poly::from_rationals(&q(), &[int(1), int(-1), int(0), rat(1, 7)]);
        assert_eq!(shift_expand(&p3, &q().zero(), 6).unwrap(), TruncSeries::from_poly(&p3, 6));
        let t = FieldTower::quadratic("s21", int(21)).unwrap();
        let x0 = t.generator().scale(&rat(1, 3));
        let quartic = Poly::from_ints(&[28, 0, -21, 0, 4]);
        assert_eq!(shift_expand(&quartic, &x0, 5).unwrap().coeff(0).as_rational(), Some(rat(7, 9)));
        let lin = shift_expand(&Poly::x(&q()), &x0, 3).unwrap();
        assert_eq!(lin.coeff(0), &x0);
        assert!(lin.coeff(1).is_one());
        assert!(lin.coeff(2).is_zero());
    }

    #[test]
    fn radical_addition_aligns_integer_offsets() {
        let a = RadicalSeries::from_series(&ser(&[int(0), int(1), int(1)], 6)).shift(&rat(1, 4));
        let b = RadicalSeries::monomial(rat(1, 4), q().one(), 6);
        let s = a.add(&b).unwrap();
        assert_eq!(s.offset(), &rat(1, 4));
        let c = RadicalSeries::monomial(rat(1, 3), q().one(), 6);
        assert!(matches!(a.add(&c), Err(Error::OffsetMismatch { .. })));
        let diff = a.sub(&a).unwrap();
        assert!(diff.is_zero());
        let cmp = a.compare(&b).unwrap();
        assert_eq!(cmp.mismatch.unwrap().index, 0);
    }

    #[test]
    fn dump_format() {
        let s = TruncSeries::from_rationals(&q(), &[int(1), rat(-1, 3)]);
        assert_eq!(s.dump(), "0: 1\n1: -1/3\n");
    }

    fn unit_series(n: usize) -> impl Strategy<Value = TruncSeries> {
        proptest::collection::vec((-6i64..7, 1i64..5), n - 1).prop_map(move |v| {
            let mut c = vec![Rational::one()];
            c.extend(v.into_iter().map(|(a, b)| rat(a, b)));
            TruncSeries::from_rationals(&FieldTower::rationals(), &c)
        })
    }

    fn nonunit_series(n: usize, val: usize) -> impl Strategy<Value = TruncSeries> {
        proptest::collection::vec((-6i64..7, 1i64..5), n - val).prop_map(move |v| {
            let mut c = vec![Rational::zero(); val];
            c.extend(v.into_iter().map(|(a, b)| rat(a, b)));
            TruncSeries::from_rationals(&FieldTower::rationals(), &c)
        })
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-7i64..8, 1i64..7).prop_map(|(a, b)| rat(a, b))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn powers_add(f in unit_series(10), a in small_rational(), b in small_rational()) {
            let lhs = &f.ratpow(&a).unwrap() * &f.ratpow(&b).unwrap();
            prop_assert_eq!(lhs, f.ratpow(&(&a + &b)).unwrap());
        }

        #[test]
        fn composition_associates(f in unit_series(8), g in nonunit_series(8, 1), h in nonunit_series(8, 1)) {
            let lhs = f.compose(&g).unwrap().compose(&h).unwrap();
            let rhs = f.compose(&g.compose(&h).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn chain_rule(f in unit_series(9), g in nonunit_series(9, 1)) {
            let lhs = f.compose(&g).unwrap().derivative();
            let rhs = &f.derivative().compose(&g).unwrap() * &g.derivative();
            prop_assert_eq!(lhs.order(), 8);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn ratmap_times_reciprocal_is_one(
            n in proptest::collection::vec(-5i64..6, 1..6),
            d in proptest::collection::vec(-5i64..6, 1..6),
        ) {
            let num = Poly::from_ints(&n);
            let den = Poly::from_ints(&d);
            prop_assume!(!num.is_zero() && !den.is_zero());
            let a = expand_ratmap(&num, &den, 10).unwrap();
            let b = expand_ratmap(&den, &num, 10).unwrap();
            let p = a.mul(&b);
            prop_assert!(p.offset().is_zero());
            prop_assert!(p.scale().is_one());
            prop_assert_eq!(p.unit().clone(), TruncSeries::one(&FieldTower::rationals(), 10));
        }

        #[test]
        fn shift_by_zero_reproduces(c in proptest::collection::vec(-9i64..10, 0..8)) {
            let p = Poly::from_ints(&c);
            let s = shift_expand(&p, &FieldTower::rationals().zero(), 8).unwrap();
            prop_assert_eq!(s, TruncSeries::from_poly(&p, 8));
        }
    }
}
