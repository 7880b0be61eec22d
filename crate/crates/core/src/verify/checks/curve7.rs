use std::sync::Arc;

use crate::belyi::maps::{psi3, psi4, psi4_paper_literal, qpoly};
use crate::curve::{
    factor_a, fiber_product_check, local_expand, norm_divisor, p7, psi4_relation_check, psi7_parts, u_cubic,
    CurvePoint, FFElem, HypCurve, NormDivisor,
};
use crate::error::{Error, Result};
use crate::exactfield::{rat, FieldElement, FieldTower, Poly};
use crate::series::RadicalSeries;
use crate::verify::linalg::{rank_check, solve_connection_constants};
use crate::verify::named::{params, Expander};
use crate::verify::{Ctx, Evidence};

use super::ip;

/// `Q(u₁)(w)` with `56u₁³ − 56u₁² + 14u₁ − 1 = 0` and `w² = 56u₁ − 21 + 2/u₁`.
pub fn proposition_tower() -> Result<FieldTower> {
    let cubic = u_cubic().monic()?;
    let t = FieldTower::rationals().extend("u1", &cubic)?;
    let u1 = t.generator();
    let w2 = &(&u1.scale(&rat(56, 1)) - &t.from_int(21)) + &u1.inv()?.scale(&rat(2, 1));
    t.adjoin_sqrt("w", &w2)
}

/// `U₁ = (u₁, (3u₁ − 14u₁²)/2)`, a zero of `2v − 3u + 14u²`.
fn u1_point(curve: &HypCurve, t: &FieldTower) -> Result<(CurvePoint, FieldElement)> {
    let u1 = t.gen("u1").expect("u1");
    let v1 = (&u1.scale(&rat(3, 1)) - &(&u1 * &u1).scale(&rat(14, 1))).scale(&rat(1, 2));
    Ok((CurvePoint::on(curve, u1.clone(), v1)?, u1))
}

fn unit_root(s: RadicalSeries, e: (i64, i64)) -> Result<RadicalSeries> {
    if s.offset() != &rat(0, 1) {
        return Err(Error::Normalization {
            found: format!("offset {} at U1", s.offset()),
        });
    }
    s.normalized().ratpow(&rat(e.0, e.1))
}

/// `P₁ ± Q₁·w(u)` defining `W±`.
fn p1_q1(curve: &Arc<HypCurve>) -> (FFElem, FFElem) {
    let p1 = FFElem::poly(
        curve,
        qpoly(&[(-11, 8), (53, 2), (-204, 1), (784, 1), (-1540, 1), (1344, 1)]),
        ip(&[-3, 30, -84]),
    );
    let q1 = FFElem::poly(
        curve,
        qpoly(&[(0, 1), (5, 2), (-25, 1), (84, 1), (-112, 1)]),
        ip(&[1, -4, 16]),
    );
    (p1, q1)
}

/// `W₇, W₀, W₊, W₋` expanded at `U₁` in `t = u − u₁`, each scaled to start with 1.
pub fn proposition_family(order: usize) -> Result<[RadicalSeries; 4]> {
    let curve = HypCurve::h7();
    let t = proposition_tower()?;
    let (point, u1) = u1_point(&curve, &t)?;
    let n = order;

    let b = FFElem::poly(&curve, ip(&[0, 3, -14]), ip(&[2]));
    let sqrt_b = unit_root(local_expand(&b, &point, n)?, (1, 2))?;
    let p7_root = unit_root(local_expand(&p7(&curve), &point, n)?, (1, 14))?;
    let u = FFElem::u(&curve);
    let u_pow = unit_root(local_expand(&u, &point, n)?, (-2, 7))?;
    let (num, den) = psi7_parts(&curve);
    let z = local_expand(&num, &point, n)?.checked_div(&local_expand(&den, &point, n)?)?;
    if z.offset() != &rat(7, 1) {
        return Err(Error::InvalidConfig(format!(
            "the covering should vanish to order 7 at U1, found {}",
            z.offset()
        )));
    }
    let e = Expander::at_point(n, u1.clone());
    let z = z.to_trunc()?.truncate(n);
    let f = e.hpg(&params(&[(-1, 14), (1, 14), (5, 14)], &[(1, 7), (5, 7)]), &z)?;
    let w7 = sqrt_b.mul(&p7_root).mul(&u_pow).mul_series(&f);

    let w0 = local_expand(&FFElem::from_poly(&curve, ip(&[-1, 4])), &point, n)?;

    let w = t.gen("w").expect("w");
    let s = e.poly(&ip(&[2, -21, 56]))?;
    let s = (&s * &e.poly(&ip(&[0, 1]))?.inv()?).ratpow_with_constant(&rat(1, 2), &w)?;
    let (p1, q1) = p1_q1(&curve);
    let p1s = local_expand(&p1, &point, n)?.to_trunc()?;
    let q1s = local_expand(&q1, &point, n)?.to_trunc()?;
    let qs = &q1s * &s;
    let wp = unit_root(RadicalSeries::from_series(&(&p1s + &qs)), (1, 4))?;
    let wm = unit_root(RadicalSeries::from_series(&(&p1s - &qs)), (1, 4))?;
    Ok([w7, w0.normalized(), wp, wm])
}

/// Rank of `{W₇, W₀, W₊, W₋}` at `U₁` to `order` coefficients.
pub fn rank_from_proposition(order: usize) -> Result<usize> {
    rank_check(&proposition_family(order)?, order)
}

/// Coefficients used to fit the constants; the rest only verify them.
const FIT_ROWS: usize = 12;

pub fn case7_proposition(ctx: &Ctx) -> Result<Evidence> {
    let n = ctx.order;
    let fam = proposition_family(n)?;
    let mut ev = Evidence::new();
    let r = rank_check(&fam, n)?;
    ev.exact_with("W7, W0, W+, W- span a space of dimension 3", r == 3, format!("rank {r}"));
    let basis = [fam[1].clone(), fam[2].clone(), fam[3].clone()];
    match solve_connection_constants(&fam[0], &basis, FIT_ROWS.min(n))? {
        Some(c) => {
            let combo = basis
                .iter()
                .zip(&c)
                .map(|(b, c)| b.mul_scalar(c))
                .try_fold(None::<RadicalSeries>, |acc, s| -> Result<_> {
                    Ok(Some(match acc {
                        None => s,
                        Some(a) => a.add(&s)?,
                    }))
                })?
                .expect("three terms");
            ev.radical("W7 = c0 W0 + c+ W+ + c- W-", fam[0].clone(), combo);
            ev.note(format!(
                "W7 = ({}) W0 + ({}) W+ + ({}) W-",
                c[0], c[1], c[2]
            ));
        }
        None => {
            ev.exact("W7 lies in the span of W0, W+, W-", false);
        }
    }
    Ok(ev)
}

fn curve_for(ctx: &Ctx) -> Arc<HypCurve> {
    if ctx.corrected() {
        HypCurve::h7()
    } else {
        HypCurve::h7_paper_literal()
    }
}

pub fn fiber_product(ctx: &Ctx) -> Result<Evidence> {
    let holds = fiber_product_check(&curve_for(ctx), &psi3())?;
    let mut ev = Evidence::new();
    ev.exact("1/Psi3(X/Y) = 27 Psi7^2 / (4 - Psi7)^3 in the function field", holds);
    Ok(ev)
}

pub fn psi4_relation(ctx: &Ctx) -> Result<Evidence> {
    let m = if ctx.corrected() { psi4() } else { psi4_paper_literal() };
    let r = psi4_relation_check(&HypCurve::h7(), &m)?;
    let mut ev = Evidence::new();
    ev.exact("-4 Psi7 / (Psi7 - 1)^2 is fixed by v -> -v", r.sigma_invariant)
        .exact("-4 Psi7 / (Psi7 - 1)^2 = 1/Psi4(1/u)", r.matches);
    Ok(ev)
}

/// `(factor, multiplicity, v at its zeros)` expected in a norm divisor.
type Expected = (Poly, usize, Option<Poly>);

fn matches_divisor(d: &NormDivisor, constant: FieldElement, poles: usize, expected: &[Expected]) -> bool {
    d.constant == constant
        && d.pole_order_at_infinity == poles
        && d.factors.len() == expected.len()
        && d.factors
            .iter()
            .zip(expected)
            .all(|(f, (p, m, v))| &f.factor == p && f.multiplicity == *m && &f.v_on_zero == v)
}

fn describe(d: &NormDivisor) -> String {
    let parts: Vec<String> = d
        .factors
        .iter()
        .map(|f| {
            let v = f
                .v_on_zero
                .as_ref()
                .map_or("v free".to_string(), |v| format!("v = {}", v.display_var("u")));
            format!("({})^{} with {v}", f.factor.display_var("u"), f.multiplicity)
        })
        .collect();
    format!("{} * {}; pole order {}", d.constant, parts.join(" * "), d.pole_order_at_infinity)
}

pub fn divisor_norms(_: &Ctx) -> Result<Evidence> {
    let curve = HypCurve::h7();
    let q = FieldTower::rationals();
    let u = ip(&[0, 1]);
    let quarter = qpoly(&[(-1, 4), (1, 1)]);
    let cubic = u_cubic().monic()?;
    let cands = [u.clone(), quarter.clone(), cubic.clone()];
    let zero = Some(Poly::zero(&q));
    let v_cubic = qpoly(&[(0, 1), (3, 2), (-7, 1)]).divrem(&cubic)?.1;
    let a = factor_a(&curve);
    let cases: [(&str, FFElem, FieldElement, usize, Vec<Expected>); 3] = [
        (
            "2v - 3u + 14u^2 vanishes at (0,0), (1/4,-1/16) and above the cubic; pole order 5",
            a.clone(),
            q.from_int(-896),
            5,
            vec![
                (u.clone(), 1, zero.clone()),
                (quarter.clone(), 1, Some(Poly::constant(q.from_rational(rat(-1, 16))))),
                (cubic.clone(), 1, Some(v_cubic.clone())),
            ],
        ),
        (
            "-2v - 3u + 14u^2 vanishes at (0,0), (1/4,1/16) and above the cubic; pole order 5",
            a.conjugate(),
            q.from_int(-896),
            5,
            vec![
                (u.clone(), 1, zero.clone()),
                (quarter.clone(), 1, Some(Poly::constant(q.from_rational(rat(1, 16))))),
                (cubic.clone(), 1, Some(-&v_cubic)),
            ],
        ),
        (
            "P7 vanishes at (0,0) and to order 7 at (1/4,1/16); pole order 8",
            p7(&curve),
            q.from_int(16384),
            8,
            vec![
                (u.clone(), 1, zero.clone()),
                (quarter.clone(), 7, Some(Poly::constant(q.from_rational(rat(1, 16))))),
            ],
        ),
    ];
    let mut ev = Evidence::new();
    for (label, f, c, poles, expected) in cases {
        let d = norm_divisor(&f, &cands)?;
        ev.exact_with(label, matches_divisor(&d, c, poles, &expected), describe(&d));
    }
    Ok(ev)
}
