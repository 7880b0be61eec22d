use crate::belyi::maps::{p3, psi3, psi3_normalized, q3};
use crate::belyi::RatMap;
use crate::error::{Error, Result};
use crate::exactfield::{int, rat, FieldElement};
use crate::series::{RadicalSeries, TruncSeries};
use crate::verify::linalg::solve_connection_constants;
use crate::verify::named::{params, Degree3Basis, Expander, TildeBasis};
use crate::verify::{Ctx, Evidence};

/// The three companion hypergeometric left sides around `x = 0`.
pub struct Degree3Sides {
    pub l0: TruncSeries,
    pub l1: TruncSeries,
    pub l2: TruncSeries,
}

fn prefactor(e: &Expander, xpow: usize, p3e: crate::exactfield::Rational) -> Result<TruncSeries> {
    let q = e.poly(&q3().pow(xpow as u32))?;
    Ok((&q * &e.pow(&p3(), p3e)?).mul_x_pow(xpow).truncate(e.order()))
}

impl Degree3Sides {
    /// `P₃^{1/6}F(−1/42, 5/42, 17/42; 1/3, 2/3; Ψ)`, `xQ₃P₃^{−13/6}F(13/42, 19/42, 31/42; 2/3, 4/3; Ψ)`
    /// and `x²Q₃²P₃^{−9/2}F(9/14, 11/14, 15/14; 4/3, 5/3; Ψ)`.
    pub fn new(e: &Expander, psi: &RatMap) -> Result<Self> {
        let z = e.argument(psi)?;
        let f0 = e.hpg(&params(&[(-1, 42), (5, 42), (17, 42)], &[(1, 3), (2, 3)]), &z)?;
        let f1 = e.hpg(&params(&[(13, 42), (19, 42), (31, 42)], &[(2, 3), (4, 3)]), &z)?;
        let f2 = e.hpg(&params(&[(9, 14), (11, 14), (15, 14)], &[(4, 3), (5, 3)]), &z)?;
        Ok(Degree3Sides {
            l0: &prefactor(e, 0, rat(1, 6))? * &f0,
            l1: &prefactor(e, 1, rat(-13, 6))? * &f1,
            l2: &prefactor(e, 2, rat(-9, 2))? * &f2,
        })
    }
}

/// `(½, (3+√7)/12, (3−√7)/12)`, the constants of the first identity.
pub fn theorem_constants(s7: &FieldElement) -> [FieldElement; 3] {
    let t = s7.tower().clone();
    [
        t.from_rational(rat(1, 2)),
        (&t.from_int(3) + s7).scale(&rat(1, 12)),
        (&t.from_int(3) - s7).scale(&rat(1, 12)),
    ]
}

fn combo(c: &[FieldElement], f: &[&TruncSeries]) -> TruncSeries {
    let mut acc = TruncSeries::zero(c[0].tower(), f[0].order());
    for (ci, fi) in c.iter().zip(f) {
        acc = &acc + &fi.scale(ci);
    }
    acc
}

/// The three identities expressing the companion functions in `Y₀, Y₁, Y₂`.
pub fn theorem_evidence(
    ev: &mut Evidence,
    e: &Expander,
    psi: &RatMap,
    tag: &str,
) -> Result<(Degree3Basis, Degree3Sides)> {
    let b = Degree3Basis::new(e)?;
    let s = Degree3Sides::new(e, psi)?;
    let t = b.s7.tower().clone();
    let ys = [&b.y0, &b.y1, &b.y2];
    let r0 = combo(&theorem_constants(&b.s7), &ys);
    let c1 = [
        t.from_int(-3),
        (&t.from_int(3) + &b.s7).scale(&rat(1, 2)),
        (&t.from_int(3) - &b.s7).scale(&rat(1, 2)),
    ];
    let r1 = combo(&c1, &ys);
    let c2 = [t.zero(), b.s7.scale(&int(-2)), b.s7.scale(&int(2))];
    let r2 = combo(&c2, &ys);
    ev.series(format!("P3^(1/6) 3F2(-1/42, 5/42, 17/42; 1/3, 2/3){tag}"), &s.l0, &r0)
        .series(format!("x Q3 P3^(-13/6) 3F2(13/42, 19/42, 31/42; 2/3, 4/3){tag}"), &s.l1, &r1)
        .series(format!("x^2 Q3^2 P3^(-9/2) 3F2(9/14, 11/14, 15/14; 4/3, 5/3){tag}"), &s.l2, &r2);
    Ok((b, s))
}

pub fn case3a_theorem(ctx: &Ctx) -> Result<Evidence> {
    let e = Expander::at_origin(ctx.order);
    let mut ev = Evidence::new();
    let (b, s) = theorem_evidence(&mut ev, &e, &psi3(), "")?;
    let basis: Vec<RadicalSeries> = [&b.y0, &b.y1, &b.y2].iter().map(|y| RadicalSeries::from_series(y)).collect();
    let got = solve_connection_constants(&RadicalSeries::from_series(&s.l0), &basis, 3)?;
    let want = theorem_constants(&b.s7);
    let holds = got.as_ref().is_some_and(|c| c[..] == want[..]);
    let detail = match &got {
        Some(c) => format!("solved ({})", c.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")),
        None => "no constants fit".to_string(),
    };
    ev.exact_with("connection constants in Y0, Y1, Y2 are (1/2, (3+s7)/12, (3-s7)/12)", holds, detail);
    Ok(ev)
}

pub fn case3a_inverse(ctx: &Ctx) -> Result<Evidence> {
    let e = Expander::at_origin(ctx.order);
    let b = Degree3Basis::new(&e)?;
    let s = Degree3Sides::new(&e, &psi3())?;
    let rhs = &s.l0 - &s.l1.scale_rational(&rat(1, 6));
    let mut ev = Evidence::new();
    ev.series("Y0 = P3^(1/6) F - x/6 Q3 P3^(-13/6) F", &b.y0, &rhs);
    let basis = [RadicalSeries::from_series(&s.l0), RadicalSeries::from_series(&s.l1)];
    let got = solve_connection_constants(&RadicalSeries::from_series(&b.y0), &basis, 2)?;
    let q = crate::exactfield::FieldTower::rationals();
    let want = [q.one(), q.from_rational(rat(-1, 6))];
    ev.exact(
        "Y0 solves to the constants (1, -1/6)",
        got.is_some_and(|c| c[..] == want[..]),
    );
    Ok(ev)
}

pub fn case3a_tilde(ctx: &Ctx) -> Result<Evidence> {
    let n = ctx.order;
    let b = TildeBasis::new(n)?;
    let t = b.field.clone();
    let e = Expander::at_point(n, b.x0.clone());
    let z = e.argument(&psi3())?;
    if z.valuation() != Some(3) {
        return Err(Error::InvalidConfig("the covering should vanish to order 3 at sqrt(7/3)".into()));
    }
    let f = e.hpg(&params(&[(-1, 42), (5, 42), (17, 42)], &[(1, 3), (2, 3)]), &z)?;
    let s3 = t.gen("s3").expect("s3");
    let s7 = t.gen("s7").expect("s7");
    let lhs = (&e.pow(&b.p3, rat(1, 6))? * &f).scale(&(&s7 - &s3).scale(&int(3)));
    let c0 = &s7.scale(&int(2)) - &s3.scale(&int(3));
    let c1 = (&s7 + &t.one()).scale(&rat(1, 2));
    let c2 = (&s7 - &t.one()).scale(&rat(1, 2));
    let rhs = combo(&[c0, c1, c2], &[&b.y0, &b.y1, &b.y2]);
    let mut ev = Evidence::new();
    ev.series("3(s7 - s3) P3~^(1/6) 3F2(-1/42, 5/42, 17/42; 1/3, 2/3) at x = sqrt(7/3)", &lhs, &rhs);
    Ok(ev)
}

pub fn case3b_identities(ctx: &Ctx) -> Result<Evidence> {
    let e = Expander::at_origin(ctx.order);
    let b = Degree3Basis::new(&e)?;
    let t = b.s7.tower().clone();
    let z = e.argument(&psi3())?;
    let l0 = &e.pow(&p3(), rat(1, 2))? * &e.hpg(&params(&[(-1, 14), (3, 14), (5, 14)], &[(1, 3), (2, 3)]), &z)?;
    let l1 = &prefactor(&e, 1, rat(-11, 6))? * &e.hpg(&params(&[(11, 42), (23, 42), (29, 42)], &[(2, 3), (4, 3)]), &z)?;
    let l2 = &prefactor(&e, 2, rat(-25, 6))? * &e.hpg(&params(&[(25, 42), (37, 42), (43, 42)], &[(4, 3), (5, 3)]), &z)?;
    let xy0 = b.y0.mul_x_pow(1).truncate(ctx.order);
    let w1y1 = &b.w1 * &b.y1;
    let w2y2 = &b.w2 * &b.y2;
    let fs = [&xy0, &w1y1, &w2y2];
    let r0 = combo(
        &[
            t.zero(),
            (&t.from_int(3) + &b.s7).scale(&rat(1, 6)),
            (&t.from_int(3) - &b.s7).scale(&rat(1, 6)),
        ],
        &fs,
    );
    let r1 = combo(
        &[t.from_rational(rat(1, 2)), b.s7.scale(&rat(-1, 6)), b.s7.scale(&rat(1, 6))],
        &fs,
    );
    let r2 = combo(&[t.from_int(6), b.s7.scale(&int(2)), b.s7.scale(&int(-2))], &fs);
    let mut ev = Evidence::new();
    ev.series("sqrt(P3) 3F2(-1/14, 3/14, 5/14; 1/3, 2/3)", &l0, &r0)
        .series("x Q3 P3^(-11/6) 3F2(11/42, 23/42, 29/42; 2/3, 4/3)", &l1, &r1)
        .series("x^2 Q3^2 P3^(-25/6) 3F2(25/42, 37/42, 43/42; 4/3, 5/3)", &l2, &r2);
    Ok(ev)
}

/// The normalized form `sign·49x³Q₃³/(27P₃⁷)` with the sign picked by the variant.
pub fn psi3_sign(ctx: &Ctx) -> Result<Evidence> {
    let sign = if ctx.corrected() { -1 } else { 1 };
    let normalized = psi3_normalized(sign);
    let reference = psi3();
    let mut ev = Evidence::new();
    ev.exact_with(
        "normalized form equals the degree-21 Belyi map",
        normalized.same_function(&reference),
        format!("leading sign {sign}"),
    );
    ev.exact(
        "49x^3 Q3^3/(27 P3^7) = -Belyi map",
        psi3_normalized(1).same_function(&reference.negated()),
    );
    let e = Expander::at_origin(ctx.order);
    theorem_evidence(&mut ev, &e, &normalized, " with the normalized form")?;
    let lead = e.argument(&normalized)?.coeff(3).clone();
    ev.note(format!("leading coefficient of the normalized form: {lead} x^3"));
    Ok(ev)
}
