use crate::belyi::maps::{p4, psi4, q4, q8, r1};
use crate::error::Result;
use crate::exactfield::{fmt_rational, int, rat, Poly, Rational};
use crate::series::TruncSeries;
use crate::verify::named::{params, r2, Expander, KFunctions};
use crate::verify::{Ctx, Evidence};

use super::{ip, qp};

/// Series context for the degree-4 identities; a few spare terms absorb
/// the divisions by powers of `x` inside `K₂`.
struct Deg4 {
    e: Expander,
    z: TruncSeries,
}

impl Deg4 {
    fn new(order: usize) -> Result<Self> {
        let e = Expander::at_origin(order + 3);
        let z = e.argument(&psi4())?;
        Ok(Deg4 { e, z })
    }

    fn f(&self, upper: &[(i64, i64)], lower: &[(i64, i64)]) -> Result<TruncSeries> {
        self.e.hpg(&params(upper, lower), &self.z)
    }

    fn pw(&self, p: &Poly, n: i64, d: i64) -> Result<TruncSeries> {
        self.e.pow(p, rat(n, d))
    }

    fn p(&self, p: &Poly) -> Result<TruncSeries> {
        self.e.poly(p)
    }
}

pub fn case4a_theorem(ctx: &Ctx) -> Result<Evidence> {
    let d = Deg4::new(ctx.order)?;
    let k = KFunctions::new(&d.e, &r2(true))?;
    let l0 = d.f(&[(-1, 28), (3, 28), (19, 28)], &[(1, 2), (3, 4)])?;
    let r0 = &k.k1 * &d.pw(&p4(), -1, 4)?;
    let l1 = d.f(&[(3, 14), (5, 14), (13, 14)], &[(3, 4), (5, 4)])?;
    let r1s = &(&d.pw(&p4(), 3, 2)? * &d.p(&q4())?.inv()?) * &d.pw(&r1(), -1, 2)?;
    let l2 = d.f(&[(13, 28), (17, 28), (33, 28)], &[(5, 4), (3, 2)])?;
    let r2s = &(&d.pw(&p4(), 13, 4)? * &k.k2) * &d.p(&(&q4().pow(2) * &r1()))?.inv()?;
    let mut ev = Evidence::new();
    ev.series("3F2(-1/28, 3/28, 19/28; 1/2, 3/4) = K1 / P4^(1/4)", &l0, &r0)
        .series("3F2(3/14, 5/14, 13/14; 3/4, 5/4) = P4^(3/2) / (Q4 sqrt(R1))", &l1, &r1s)
        .series("3F2(13/28, 17/28, 33/28; 5/4, 3/2) = P4^(13/4) K2 / (Q4^2 R1)", &l2, &r2s);
    Ok(ev)
}

pub fn case4a_radical(ctx: &Ctx) -> Result<Evidence> {
    let d = Deg4::new(ctx.order)?;
    let l0 = d.f(&[(-1, 14), (3, 14), (5, 14)], &[(1, 4), (3, 4)])?;
    let r0 = &d.pw(&r1(), 1, 2)? * &d.pw(&p4(), -1, 2)?;
    let l1 = d.f(&[(3, 14), (5, 14), (13, 14)], &[(1, 4), (3, 4)])?;
    let r1_power = if ctx.corrected() { d.pw(&r1(), 1, 2)? } else { d.p(&r1())? };
    let r1s = &(&(&d.pw(&p4(), 3, 2)? * &r1_power) * &d.p(&q8())?.inv()?) * &d.p(&qp(&[(1, 1), (0, 1), (-1, 4), (1, 28)]))?;
    let mut ev = Evidence::new();
    ev.series("3F2(-1/14, 3/14, 5/14; 1/4, 3/4) = sqrt(R1) / sqrt(P4)", &l0, &r0).series(
        if ctx.corrected() {
            "3F2(3/14, 5/14, 13/14; 1/4, 3/4) = P4^(3/2) sqrt(R1) / Q8 (1 - x^2/4 + x^3/28)"
        } else {
            "3F2(3/14, 5/14, 13/14; 1/4, 3/4) = P4^(3/2) R1 / Q8 (1 - x^2/4 + x^3/28)"
        },
        &l1,
        &r1s,
    );
    Ok(ev)
}

/// `P₄⁷(1 − Ψ₄)/Q₈²` as an exact polynomial, if the division is exact.
pub fn derived_r2() -> Result<Option<Poly>> {
    let m = psi4();
    let num = &p4().pow(7) * &(m.den() - m.num());
    let den = m.den() * &q8().pow(2);
    num.exact_div(&den)
}

pub fn case4a_split(ctx: &Ctx) -> Result<Evidence> {
    let m = psi4();
    let x = ip(&[0, 1]);
    let lhs = &(&p4().pow(7) * m.num()).scale_rational(&int(32))
        + &(&(&(&x * &r1().pow(2)) * &q4().pow(4)) * m.den()).scale_rational(&int(343));
    let mut ev = Evidence::new();
    ev.exact("32 P4^7 Psi4 + 343 x R1^2 Q4^4 = 0", lhs.is_zero());
    let printed = r2(ctx.corrected());
    match derived_r2()? {
        Some(derived) => {
            let c2: Rational = derived.coeff(2).as_rational().unwrap_or_else(|| int(0));
            ev.note(format!("derived x^2 coefficient of R2: {}", fmt_rational(&c2)));
            ev.note(format!("derived R2 = {}", derived.display_var("x")));
            let mismatched: Vec<String> = (0..=4)
                .filter(|&k| derived.coeff(k) != printed.coeff(k))
                .map(|k| {
                    format!(
                        "x^{k}: derived {}, stated {}",
                        derived.coeff(k),
                        printed.coeff(k)
                    )
                })
                .collect();
            ev.exact_with(
                "R2 = P4^7 (1 - Psi4) / Q8^2 coefficient by coefficient",
                mismatched.is_empty() && derived.degree() == Some(4),
                mismatched.join("; "),
            );
            ev.exact(
                "Psi4 - 1 = -R2 Q8^2 / P4^7",
                &(m.num() - m.den()) * &p4().pow(7) == -&(&(&printed * &q8().pow(2)) * m.den()),
            );
        }
        None => {
            ev.exact("P4^7 (1 - Psi4) / Q8^2 is a polynomial", false);
        }
    }
    Ok(ev)
}

pub fn case4b_identities(ctx: &Ctx) -> Result<Evidence> {
    let d = Deg4::new(ctx.order)?;
    let k = KFunctions::new(&d.e, &r2(true))?;
    let l0 = d.f(&[(-3, 28), (1, 28), (9, 28)], &[(1, 4), (1, 2)])?;
    let n0 = &k.root.scale_rational(&rat(1, 2)) + &d.p(&qp(&[(1, 2), (-15, 32), (53, 448), (-1, 112)]))?;
    let r0 = &n0 * &(&d.pw(&p4(), 3, 4)? * &k.k1).inv()?;

    let l1 = d.f(&[(11, 28), (15, 28), (23, 28)], &[(3, 4), (3, 2)])?;
    let inner = &k.root + &d.p(&qp(&[(-1, 1), (15, 16), (-53, 224), (1, 56)]))?;
    let inner = inner.div_x_pow(1)?.scale_rational(&rat(64, 15));
    let r1s = &(&(&d.pw(&p4(), 11, 4)? * &d.p(&(&q4().pow(2) * &r1()))?.inv()?) * &inner) * &k.k2.inv()?;

    let l2 = d.f(&[(9, 14), (11, 14), (15, 14)], &[(5, 4), (7, 4)])?;
    let r2s = &(&(&d.pw(&p4(), 9, 2)? * &d.p(&q4().pow(3))?.inv()?) * &d.pw(&r1(), -3, 2)?) * &d.p(&qp(&[(1, 1), (-3, 14)]))?;

    let l3 = d.f(&[(1, 14), (9, 14), (11, 14)], &[(3, 4), (5, 4)])?;
    let r3 = &(&(&d.pw(&p4(), 1, 2)? * &d.p(&q4())?.inv()?) * &d.pw(&r1(), -1, 2)?)
        * &d.p(&qp(&[(1, 1), (-3, 5), (1, 8), (-1, 112)]))?;

    let l4 = d.f(&[(-3, 14), (1, 14), (9, 14)], &[(1, 4), (3, 4)])?;
    let r4 = &(&d.pw(&r1(), 1, 2)? * &d.pw(&p4(), -3, 2)?) * &d.p(&qp(&[(1, 1), (-3, 4), (1, 4), (-3, 112)]))?;

    let mut ev = Evidence::new();
    ev.series("3F2(-3/28, 1/28, 9/28; 1/4, 1/2)", &l0, &r0)
        .series("3F2(11/28, 15/28, 23/28; 3/4, 3/2)", &l1, &r1s)
        .series("3F2(9/14, 11/14, 15/14; 5/4, 7/4)", &l2, &r2s)
        .series("3F2(1/14, 9/14, 11/14; 3/4, 5/4)", &l3, &r3)
        .series("3F2(-3/14, 1/14, 9/14; 1/4, 3/4)", &l4, &r4);
    Ok(ev)
}
