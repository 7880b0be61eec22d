use crate::error::Result;
use crate::exactfield::{int, rat, Rational};
use crate::series::TruncSeries;
use crate::verify::named::{params, Expander};
use crate::verify::{Ctx, Evidence};

use super::{ip, qp, rmap};

pub fn octa1(ctx: &Ctx) -> Result<Evidence> {
    let e = Expander::at_origin(ctx.order);
    let arg = rmap(
        &ip(&[0, 108]) * &ip(&[-1, 1]).pow(4),
        ip(&[1, 14, 1]).pow(3),
    );
    let lhs = e.hpg(&params(&[(5, 24), (13, 24)], &[(5, 4)]), &e.argument(&arg)?)?;
    let rhs = &e.pow(&ip(&[1, 14, 1]), rat(5, 8))? * &e.poly(&ip(&[1, -1]))?.inv()?;
    let mut ev = Evidence::new();
    ev.series("2F1(5/24, 13/24; 5/4) octahedral evaluation", &lhs, &rhs);
    Ok(ev)
}

pub fn octa2(ctx: &Ctx) -> Result<Evidence> {
    let e = Expander::at_origin(ctx.order);
    let arg = rmap(
        &ip(&[0, 27]) * &ip(&[1, 1]).pow(4),
        ip(&[1, 4, 1]).pow(3).scale_rational(&int(2)),
    );
    let lhs = e.hpg(&params(&[(1, 6), (5, 6)], &[(5, 4)]), &e.argument(&arg)?)?;
    let rhs = &(&e.pow(&ip(&[1, 2]), rat(1, 4))? * &e.poly(&ip(&[1, 1]))?.inv()?)
        * &e.pow(&ip(&[1, 4, 1]), rat(1, 2))?;
    let mut ev = Evidence::new();
    ev.series("2F1(1/6, 5/6; 5/4) octahedral evaluation", &lhs, &rhs);
    Ok(ev)
}

pub fn octa_cubic_chain(ctx: &Ctx) -> Result<Evidence> {
    let e = Expander::at_origin(ctx.order);
    let n = ctx.order;
    let arg = rmap(&ip(&[0, 27]) * &ip(&[-1, 1]).pow(2), ip(&[1, 3]).pow(3));
    let x = TruncSeries::x(&crate::exactfield::FieldTower::rationals(), n);
    let left = e.hpg(&params(&[(5, 24), (13, 24)], &[(5, 4)]), &e.argument(&arg)?)?;
    let pre = e.pow(&ip(&[1, 3]), rat(5, 8))?;
    let step1 = &pre * &e.hpg(&params(&[(5, 8), (9, 8)], &[(5, 4)]), &x)?;
    let pre2 = &pre * &e.pow(&ip(&[1, -1]), rat(-1, 2))?;
    let step2 = &pre2 * &e.hpg(&params(&[(5, 8), (1, 8)], &[(5, 4)]), &x)?;
    let sqrt = e.pow(&ip(&[1, -1]), rat(1, 2))?;
    let half = (&sqrt + &TruncSeries::one(sqrt.field(), n)).scale_rational(&rat(1, 2));
    let step3 = &pre2 * &half.ratpow(&rat(-1, 4))?;
    let mut ev = Evidence::new();
    ev.series("cubic argument to 2F1(5/8, 9/8; 5/4; x)", &left, &step1)
        .series("Euler transformation to 2F1(5/8, 1/8; 5/4; x)", &step1, &step2)
        .series("radical closed form", &step2, &step3);
    Ok(ev)
}

pub fn klein_param(ctx: &Ctx) -> Result<Evidence> {
    let e = Expander::at_origin(ctx.order);
    let x = TruncSeries::x(&crate::exactfield::FieldTower::rationals(), ctx.order);
    let f1 = e.hpg(&params(&[(5, 42), (19, 42), (11, 14)], &[(5, 7), (8, 7)]), &x)?;
    let f2 = e.hpg(&params(&[(-1, 42), (13, 42), (9, 14)], &[(4, 7), (6, 7)]), &x)?;
    let f3 = e.hpg(&params(&[(17, 42), (31, 42), (15, 14)], &[(9, 7), (10, 7)]), &x)?;
    let lhs = &f1.pow(3) * &f2;
    let rhs = &(&f2.pow(3) * &f3) + &(&(&f3.pow(3) * &f1) * &x).scale_rational(&rat(1, 1728));
    let mut ev = Evidence::new();
    ev.series("F1^3 F2 = F2^3 F3 + x/1728 F3^3 F1", &lhs, &rhs);
    Ok(ev)
}

/// Parameter pairs `(a, b)` at which the two transformations are sampled.
pub const TRANSFORM_SAMPLES: [((i64, i64), (i64, i64)); 6] = [
    ((1, 5), (1, 7)),
    ((2, 9), (3, 11)),
    ((1, 3), (1, 5)),
    ((-1, 7), (2, 5)),
    ((3, 10), (1, 9)),
    ((1, 4), (1, 6)),
];

fn hp(upper: Vec<Rational>, lower: Vec<Rational>) -> Result<crate::hypergeom::HpgParams> {
    crate::hypergeom::HpgParams::new(upper, lower)
}

/// `F(a, a+1/4, a+1/2; b+1/4, 3a−b+1; −4z/(z−1)²) = (1−z)^{2a} F(2a, 2a−b+3/4, b−a; b+1/4, 3a−b+1; z)`
pub fn quadratic_transform(a: &Rational, b: &Rational, n: usize) -> Result<(TruncSeries, TruncSeries)> {
    let e = Expander::at_origin(n);
    let one = int(1);
    let lower = vec![b + rat(1, 4), a * int(3) - b + &one];
    let left = hp(vec![a.clone(), a + rat(1, 4), a + rat(1, 2)], lower.clone())?;
    let right = hp(vec![a * int(2), a * int(2) - b + rat(3, 4), b - a], lower)?;
    let arg = rmap(ip(&[0, -4]), ip(&[1, -1]).pow(2));
    let x = TruncSeries::x(&crate::exactfield::FieldTower::rationals(), n);
    let lhs = e.hpg(&left, &e.argument(&arg)?)?;
    let rhs = &e.pow(&ip(&[1, -1]), a * int(2))? * &e.hpg(&right, &x)?;
    Ok((lhs, rhs))
}

/// `F(a, a+1/3, a+2/3; b+1/2, 3a−b+1; 27z²/(4−z)³) = (1−z/4)^{3a} F(3a, b, 3a−b+1/2; 2b, 6a−2b+1; z)`
pub fn cubic_transform(a: &Rational, b: &Rational, n: usize) -> Result<(TruncSeries, TruncSeries)> {
    let e = Expander::at_origin(n);
    let one = int(1);
    let left = hp(
        vec![a.clone(), a + rat(1, 3), a + rat(2, 3)],
        vec![b + rat(1, 2), a * int(3) - b + &one],
    )?;
    let right = hp(
        vec![a * int(3), b.clone(), a * int(3) - b + rat(1, 2)],
        vec![b * int(2), a * int(6) - b * int(2) + &one],
    )?;
    let arg = rmap(ip(&[0, 0, 27]), ip(&[4, -1]).pow(3));
    let x = TruncSeries::x(&crate::exactfield::FieldTower::rationals(), n);
    let lhs = e.hpg(&left, &e.argument(&arg)?)?;
    let rhs = &e.pow(&qp(&[(1, 1), (-1, 4)]), a * int(3))? * &e.hpg(&right, &x)?;
    Ok((lhs, rhs))
}

fn sampled(ctx: &Ctx, f: fn(&Rational, &Rational, usize) -> Result<(TruncSeries, TruncSeries)>) -> Result<Evidence> {
    let mut ev = Evidence::new();
    for ((an, ad), (bn, bd)) in TRANSFORM_SAMPLES {
        let (lhs, rhs) = f(&rat(an, ad), &rat(bn, bd), ctx.order)?;
        ev.series(format!("a = {an}/{ad}, b = {bn}/{bd}"), &lhs, &rhs);
    }
    Ok(ev)
}

pub fn quad_transform(ctx: &Ctx) -> Result<Evidence> {
    sampled(ctx, quadratic_transform)
}

pub fn cubic_transform_check(ctx: &Ctx) -> Result<Evidence> {
    sampled(ctx, cubic_transform)
}

pub fn case7_cubic_rel(ctx: &Ctx) -> Result<Evidence> {
    let e = Expander::at_origin(ctx.order);
    let x = TruncSeries::x(&crate::exactfield::FieldTower::rationals(), ctx.order);
    let arg = rmap(ip(&[0, 0, 27]), ip(&[4, -1]).pow(3));
    let lhs = e.hpg(&params(&[(-1, 42), (13, 42), (9, 14)], &[(4, 7), (6, 7)]), &e.argument(&arg)?)?;
    let rhs = &e.pow(&qp(&[(1, 1), (-1, 4)]), rat(-1, 14))?
        * &e.hpg(&params(&[(-1, 14), (1, 14), (5, 14)], &[(1, 7), (5, 7)]), &x)?;
    let mut ev = Evidence::new();
    ev.series("cubic transformation between the (3A) and (7A) representatives", &lhs, &rhs);
    Ok(ev)
}

pub fn case7_quad_rel(ctx: &Ctx) -> Result<Evidence> {
    let e = Expander::at_origin(ctx.order);
    let x = TruncSeries::x(&crate::exactfield::FieldTower::rationals(), ctx.order);
    let arg = rmap(ip(&[0, -4]), ip(&[1, -1]).pow(2));
    let lhs = e.hpg(&params(&[(-1, 28), (3, 14), (13, 28)], &[(2, 7), (6, 7)]), &e.argument(&arg)?)?;
    let rhs = &e.pow(&ip(&[1, -1]), rat(-1, 14))?
        * &e.hpg(&params(&[(-1, 14), (1, 14), (9, 14)], &[(2, 7), (6, 7)]), &x)?;
    let mut ev = Evidence::new();
    ev.series("quadratic transformation between the (4B) and (7B) representatives", &lhs, &rhs);
    Ok(ev)
}
