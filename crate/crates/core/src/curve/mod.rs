//! The genus-2 curve `H₇: v² = u·q(u)`, its function field and the
//! degree-21 covering `Ψ₇` on it.

mod ffelem;
mod local;

use std::sync::Arc;

pub use ffelem::{FFElem, HypCurve, RatFunc};
pub use local::{local_coordinates, local_expand, CurvePoint};

use crate::belyi::RatMap;
use crate::error::{Error, Result};
use crate::exactfield::{rat, FieldElement, Poly};

fn qp(c: &[(i64, i64)]) -> Poly {
    crate::belyi::maps::qpoly(c)
}

/// `2v − 3u + 14u²`
pub fn factor_a(curve: &Arc<HypCurve>) -> FFElem {
    FFElem::poly(curve, qp(&[(0, 1), (-3, 1), (14, 1)]), qp(&[(2, 1)]))
}

/// `v + 7u/2 − 35u² + 112u³ − 128u⁴`
pub fn p7(curve: &Arc<HypCurve>) -> FFElem {
    FFElem::poly(
        curve,
        qp(&[(0, 1), (7, 2), (-35, 1), (112, 1), (-128, 1)]),
        qp(&[(1, 1)]),
    )
}

/// `u(1 − 4u)⁷`
fn psi7_den_poly() -> Poly {
    &Poly::from_ints(&[0, 1]) * &Poly::from_ints(&[1, -4]).pow(7)
}

/// Numerator `P₇²(2v−3u+14u²)⁷` and denominator `u(1−4u)⁷(−2v−3u+14u²)⁷` of `Ψ₇`.
pub fn psi7_parts(curve: &Arc<HypCurve>) -> (FFElem, FFElem) {
    let a = factor_a(curve);
    let num = p7(curve).pow(2).mul(&a.pow(7)).expect("same curve");
    let den = FFElem::from_poly(curve, psi7_den_poly())
        .mul(&a.conjugate().pow(7))
        .expect("same curve");
    (num, den)
}

/// `Ψ₇` as a single function-field element.
pub fn psi7(curve: &Arc<HypCurve>) -> Result<FFElem> {
    let (n, d) = psi7_parts(curve);
    n.checked_div(&d)
}

/// `x(u, v) = X/Y` parametrizing the fiber product.
pub fn fiber_parametrization(curve: &Arc<HypCurve>) -> (FFElem, FFElem) {
    let x = FFElem::poly(
        curve,
        &Poly::from_ints(&[-1, 6]) * &Poly::from_ints(&[2, -21, 56]),
        Poly::from_ints(&[2]),
    );
    let y = FFElem::from_poly(curve, &Poly::from_ints(&[-1, 4]) * &Poly::from_ints(&[1, -16, 56]));
    (x, y)
}

/// `Σ cₖ Xᵏ Y^{n−k}` for a polynomial of degree at most `n`.
pub fn homogenize(p: &Poly, x: &FFElem, y: &FFElem, n: usize) -> FFElem {
    let curve = x.curve();
    let mut xp = Vec::with_capacity(n + 1);
    let mut cur = FFElem::constant(curve, p.field().one());
    for _ in 0..=n {
        xp.push(cur.clone());
        cur = cur.mul(x).expect("same curve");
    }
    let mut acc = FFElem::constant(curve, p.field().zero());
    let mut yp = FFElem::constant(curve, p.field().one());
    for k in (0..=n).rev() {
        let c = p.coeff(k);
        if !c.is_zero() {
            acc = acc.add(&xp[k].mul(&yp).expect("same curve").scale(&c)).expect("same curve");
        }
        yp = yp.mul(y).expect("same curve");
    }
    acc
}

/// Is `1/Ψ(x(u,v)) = 27Ψ₇²/(4 − Ψ₇)³` on the curve, for the degree-21 map `psi`?
pub fn fiber_product_check(curve: &Arc<HypCurve>, psi: &RatMap) -> Result<bool> {
    let (x, y) = fiber_parametrization(curve);
    let n = psi.degree();
    let nh = homogenize(psi.num(), &x, &y, n);
    let dh = homogenize(psi.den(), &x, &y, n);
    let (p, q) = psi7_parts(curve);
    let four_q_minus_p = q.scale(&int_el(4)).sub(&p)?;
    let lhs = dh.mul(&four_q_minus_p.pow(3))?;
    let rhs = p.pow(2).mul(&q)?.mul(&nh)?.scale(&int_el(27));
    Ok(lhs == rhs)
}

fn int_el(n: i64) -> FieldElement {
    crate::exactfield::FieldTower::rationals().from_int(n)
}

/// Outcome of comparing `−4Ψ₇/(Ψ₇ − 1)²` with `1/Ψ₄(1/u)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Psi4Relation {
    /// The left side is fixed by `v ↦ −v`.
    pub sigma_invariant: bool,
    /// It equals `1/Ψ₄(1/u)` exactly.
    pub matches: bool,
}

pub fn psi4_relation_check(curve: &Arc<HypCurve>, psi4: &RatMap) -> Result<Psi4Relation> {
    let (p, q) = psi7_parts(curve);
    let pq = p.mul(&q)?;
    let diff = p.sub(&q)?;
    let sp = p.conjugate();
    let sq = q.conjugate();
    let sigma_invariant = sp.mul(&sq)?.mul(&diff.pow(2))? == pq.mul(&sp.sub(&sq)?.pow(2))?;
    let n = psi4.degree();
    let rev_num = FFElem::from_poly(curve, psi4.num().reverse(n));
    let rev_den = FFElem::from_poly(curve, psi4.den().reverse(n));
    let lhs = pq.scale(&int_el(-4)).mul(&rev_num)?;
    let rhs = rev_den.mul(&diff.pow(2))?;
    Ok(Psi4Relation {
        sigma_invariant,
        matches: lhs == rhs,
    })
}

/// One irreducible factor of a norm and the points above it.
#[derive(Clone, Debug)]
pub struct NormFactor {
    pub factor: Poly,
    pub multiplicity: usize,
    /// `v ≡ −a/b mod factor` at the zeros of the element (absent when `b` vanishes there).
    pub v_on_zero: Option<Poly>,
}

/// Zeros of a polynomial element read off from its norm.
#[derive(Clone, Debug)]
pub struct NormDivisor {
    pub constant: FieldElement,
    pub factors: Vec<NormFactor>,
    /// Pole order at the point at infinity, equal to `deg norm`.
    pub pole_order_at_infinity: usize,
}

/// Trial-divides `norm(f)` by the candidate factors; fails if anything is left.
pub fn norm_divisor(f: &FFElem, candidates: &[Poly]) -> Result<NormDivisor> {
    if !f.d().is_one() {
        return Err(Error::InvalidConfig("norm_divisor expects a polynomial element".into()));
    }
    let nf = f.norm()?;
    let mut rest = nf.num.clone();
    let deg = rest.degree().ok_or(Error::ZeroPolynomial)?;
    let mut factors = Vec::new();
    for c in candidates {
        let c = c.monic()?;
        let mut m = 0;
        while let Some(q) = rest.exact_div(&c)? {
            rest = q;
            m += 1;
        }
        if m == 0 {
            continue;
        }
        let v_on_zero = match f.b().divrem(&c)?.1 {
            r if r.is_zero() => None,
            _ => Some(solve_mod(f.a(), f.b(), &c)?),
        };
        factors.push(NormFactor {
            factor: c,
            multiplicity: m,
            v_on_zero,
        });
    }
    if !rest.is_constant() {
        return Err(Error::InconsistentPattern(format!(
            "norm has an unexplained factor {}",
            rest.display_var("u")
        )));
    }
    Ok(NormDivisor {
        constant: rest.coeff(0),
        factors,
        pole_order_at_infinity: deg,
    })
}

/// `−a/b mod m` via the extended Euclidean algorithm.
fn solve_mod(a: &Poly, b: &Poly, m: &Poly) -> Result<Poly> {
    let field = m.field().clone();
    let (mut r0, mut r1) = (m.clone(), b.divrem(m)?.1);
    let (mut s0, mut s1) = (Poly::zero(&field), Poly::one(&field));
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1)?;
        let s2 = &s0 - &(&q * &s1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if !r0.is_constant() {
        return Err(Error::NotCoprime);
    }
    let binv = s0.scale(&r0.coeff(0).inv()?);
    Ok((-&(a * &binv)).divrem(m)?.1)
}

/// `56u³ − 56u² + 14u − 1`, whose roots carry the zeros of `2v − 3u + 14u²`.
pub fn u_cubic() -> Poly {
    Poly::from_ints(&[-1, 14, -56, 56])
}

/// The points `(1/4, ±1/16)`.
pub fn quarter_point(curve: &HypCurve, sign: i64) -> Result<CurvePoint> {
    let q = crate::exactfield::FieldTower::rationals();
    CurvePoint::on(curve, q.from_rational(rat(1, 4)), q.from_rational(rat(sign, 16)))
}

/// `(0, 0)`
pub fn origin(curve: &HypCurve) -> Result<CurvePoint> {
    let q = crate::exactfield::FieldTower::rationals();
    CurvePoint::on(curve, q.zero(), q.zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::belyi::maps::{psi3, psi4, psi4_paper_literal};
    use crate::exactfield::FieldTower;
    use proptest::prelude::*;

    fn h7() -> Arc<HypCurve> {
        HypCurve::h7()
    }

    #[test]
    fn curve_model() {
        let c = h7();
        assert_eq!(c.q(), &qp(&[(1, 1), (-63, 4), (91, 1), (-231, 1), (224, 1)]));
        assert!(HypCurve::new(Poly::from_ints(&[1, 2, 1])).is_err());
        assert!(HypCurve::new(Poly::from_ints(&[1, -2, 2, -2, 1])).is_err());
    }

    #[test]
    fn fiber_product_holds_on_corrected_model_only() {
        assert!(fiber_product_check(&h7(), &psi3()).unwrap());
        assert!(!fiber_product_check(&HypCurve::h7_paper_literal(), &psi3()).unwrap());
    }

    #[test]
    fn psi4_relation() {
        let r = psi4_relation_check(&h7(), &psi4()).unwrap();
        assert!(r.sigma_invariant && r.matches);
        let r = psi4_relation_check(&h7(), &psi4_paper_literal()).unwrap();
        assert!(r.sigma_invariant && !r.matches);
    }

    #[test]
    fn norms_of_the_factors() {
        let c = h7();
        let na = factor_a(&c).norm().unwrap();
        let expected = (&(&Poly::from_ints(&[0, 1]) * &Poly::from_ints(&[-1, 4])) * &u_cubic()).scale_rational(&rat(-4, 1));
        assert_eq!(na.num, expected);
        let np = p7(&c).norm().unwrap();
        let expected = (&Poly::from_ints(&[0, 1]) * &qp(&[(-1, 4), (1, 1)]).pow(7)).scale_rational(&rat(16384, 1));
        assert_eq!(np.num, expected);
        let n7 = psi7(&c).unwrap().norm().unwrap();
        assert!(n7.num.is_one() && n7.den.is_one());
    }

    #[test]
    fn divisors_from_norms() {
        let c = h7();
        let cands = [Poly::from_ints(&[0, 1]), Poly::from_ints(&[-1, 4]), u_cubic()];
        let da = norm_divisor(&factor_a(&c), &cands).unwrap();
        assert_eq!(da.pole_order_at_infinity, 5);
        let quarter = &da.factors[1];
        assert_eq!(quarter.multiplicity, 1);
        assert_eq!(quarter.v_on_zero.as_ref().unwrap().coeff(0).as_rational(), Some(rat(-1, 16)));
        let cubic = &da.factors[2];
        let expected = qp(&[(0, 1), (3, 2), (-7, 1)]).divrem(&u_cubic().monic().unwrap()).unwrap().1;
        assert_eq!(cubic.v_on_zero.as_ref().unwrap(), &expected);
        let dp = norm_divisor(&p7(&c), &cands).unwrap();
        assert_eq!(dp.pole_order_at_infinity, 8);
        assert_eq!(dp.factors[1].multiplicity, 7);
        assert_eq!(dp.factors[1].v_on_zero.as_ref().unwrap().coeff(0).as_rational(), Some(rat(1, 16)));
        assert!(norm_divisor(&p7(&c), &cands[..1]).is_err());
    }

    #[test]
    fn psi7_at_origin_and_zero_order() {
        let c = h7();
        let f = psi7(&c).unwrap();
        let s = local_expand(&f, &origin(&c).unwrap(), 6).unwrap();
        assert_eq!(s.offset(), &rat(0, 1));
        assert_eq!(s.scale().as_rational(), Some(rat(-1, 1)));
        let s = local_expand(&factor_a(&c), &quarter_point(&c, -1).unwrap(), 4).unwrap();
        assert_eq!(s.offset(), &rat(1, 1));
        let s = local_expand(&p7(&c), &quarter_point(&c, 1).unwrap(), 4).unwrap();
        assert_eq!(s.offset(), &rat(7, 1));
    }

    #[test]
    fn weierstrass_parameter() {
        let c = h7();
        let (u, v) = local_coordinates(&c, &origin(&c).unwrap(), 6).unwrap();
        let q = FieldTower::rationals();
        assert_eq!(u.coeff(2), &q.one());
        assert_eq!(u.coeff(4), &q.from_rational(rat(63, 4)));
        assert_eq!(v.coeff(1), &q.one());
        assert!(CurvePoint::on(&c, q.one(), q.one()).is_err());
        assert!(local_coordinates(&c, &CurvePoint::Infinity, 4).is_err());
    }

    fn small_elem(c: &Arc<HypCurve>, a: Vec<i64>, b: Vec<i64>, d: Vec<i64>) -> Option<FFElem> {
        let d = Poly::from_ints(&d);
        if d.is_zero() {
            return None;
        }
        FFElem::new(c, Poly::from_ints(&a), Poly::from_ints(&b), d).ok()
    }

    fn coeffs() -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(-4i64..5, 0..4)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn norm_is_multiplicative(a1 in coeffs(), b1 in coeffs(), a2 in coeffs(), b2 in coeffs(), d in coeffs()) {
            let c = h7();
            let (Some(f), Some(g)) = (small_elem(&c, a1, b1, d), small_elem(&c, a2, b2, vec![1])) else { return Ok(()); };
            let lhs = f.mul(&g).unwrap().norm().unwrap();
            let (nf, ng) = (f.norm().unwrap(), g.norm().unwrap());
            prop_assert!(lhs == RatFunc::new(&nf.num * &ng.num, &nf.den * &ng.den).unwrap());
        }

        #[test]
        fn conjugation_is_an_automorphism(a1 in coeffs(), b1 in coeffs(), a2 in coeffs(), b2 in coeffs()) {
            let c = h7();
            let f = small_elem(&c, a1, b1, vec![1]).unwrap();
            let g = small_elem(&c, a2, b2, vec![1]).unwrap();
            prop_assert!(f.mul(&g).unwrap().conjugate() == f.conjugate().mul(&g.conjugate()).unwrap());
            prop_assert!(f.add(&g).unwrap().conjugate() == f.conjugate().add(&g.conjugate()).unwrap());
            prop_assert!(f.conjugate().conjugate() == f);
            if !f.is_zero() {
                prop_assert!(f.mul(&f.inv().unwrap()).unwrap() == FFElem::constant(&c, FieldTower::rationals().one()));
            }
        }

        #[test]
        fn expansion_is_multiplicative(a1 in coeffs(), b1 in coeffs(), a2 in coeffs(), b2 in coeffs(), u0 in -3i64..4, w in any::<bool>()) {
            let c = h7();
            let f = small_elem(&c, a1, b1, vec![1]).unwrap();
            let g = small_elem(&c, a2, b2, vec![1]).unwrap();
            prop_assume!(!f.is_zero() && !g.is_zero());
            let p = if w {
                origin(&c).unwrap()
            } else {
                let y = c.rhs().eval_rational(&rat(u0, 1)).as_rational().unwrap();
                match FieldTower::quadratic("r", y) {
                    Ok(t) => CurvePoint::on(&c, t.from_int(u0), t.generator()).unwrap(),
                    Err(_) => return Ok(()),
                }
            };
            let n = 6;
            let fg = local_expand(&f.mul(&g).unwrap(), &p, n).unwrap();
            let prod = local_expand(&f, &p, n).unwrap().mul(&local_expand(&g, &p, n).unwrap());
            let cmp = fg.compare(&prod).unwrap();
            prop_assert!(cmp.mismatch.is_none());
        }

        #[test]
        fn local_coordinates_satisfy_the_curve(u0 in -5i64..6, n in 3usize..10) {
            let c = h7();
            let y = c.rhs().eval_rational(&rat(u0, 1)).as_rational().unwrap();
            let p = if num_traits::Zero::is_zero(&y) {
                origin(&c).unwrap()
            } else {
                match FieldTower::quadratic("r", y.clone()) {
                    Ok(t) => CurvePoint::on(&c, t.from_int(u0), t.generator()).unwrap(),
                    Err(_) => return Ok(()),
                }
            };
            let (u, v) = local_coordinates(&c, &p, n).unwrap();
            let field = u.field().clone();
            let mut rhs = TruncSeriesHelper::eval(c.rhs(), &u);
            rhs = rhs.lift(&field).unwrap();
            prop_assert_eq!(&v * &v, rhs);
        }
    }

    struct TruncSeriesHelper;
    impl TruncSeriesHelper {
        fn eval(p: &Poly, u: &crate::series::TruncSeries) -> crate::series::TruncSeries {
            let mut acc = crate::series::TruncSeries::zero(u.field(), u.order());
            for c in p.coeffs().iter().rev() {
                acc = &(&acc * u) + &crate::series::TruncSeries::constant(c.lift(u.field()).unwrap(), u.order());
            }
            acc
        }
    }
}
