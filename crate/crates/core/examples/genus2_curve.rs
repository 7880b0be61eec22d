//! The genus-2 curve, its function field, norms and local expansions.
//!
//! `cargo run --example genus2_curve`

use darboux::belyi::maps::psi3;
use darboux::curve::{
    factor_a, fiber_product_check, local_expand, norm_divisor, origin, p7, psi7, quarter_point, u_cubic, FFElem,
    HypCurve,
};
use darboux::exactfield::{FieldTower, Poly};

fn main() -> darboux::error::Result<()> {
    let c = HypCurve::h7();
    println!("v^2 = {}", c.rhs().display_var("u"));

    let a = factor_a(&c);
    println!("A = {a}, norm A = {}", a.norm()?.num.display_var("u"));
    let q = FieldTower::rationals();
    let cands = [
        Poly::from_ints(&[0, 1]),
        Poly::from_rationals(&q, &[darboux::exactfield::rat(-1, 4), darboux::exactfield::rat(1, 1)]),
        u_cubic(),
    ];
    for (name, f) in [("A", a.clone()), ("conj A", a.conjugate()), ("P7", p7(&c))] {
        let d = norm_divisor(&f, &cands)?;
        let zeros: Vec<String> = d
            .factors
            .iter()
            .map(|z| format!("({})^{}", z.factor.display_var("u"), z.multiplicity))
            .collect();
        println!("{name}: norm = {} {}, pole order {}", d.constant, zeros.join(" "), d.pole_order_at_infinity);
    }

    let psi = psi7(&c)?;
    let at_o = local_expand(&psi, &origin(&c)?, 6)?;
    println!("psi7 at (0,0): {at_o}");
    let at_q = local_expand(&psi, &quarter_point(&c, 1)?, 6)?;
    println!("psi7 at (1/4,1/16): {at_q}");
    println!("v at (0,0): {}", local_expand(&FFElem::v(&c), &origin(&c)?, 6)?);

    println!("fiber product on the curve: {}", fiber_product_check(&c, &psi3())?);
    println!("fiber product on the cubic-term variant: {}", fiber_product_check(&HypCurve::h7_paper_literal(), &psi3())?);
    Ok(())
}
