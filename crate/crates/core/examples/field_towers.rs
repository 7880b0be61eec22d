//! Exact arithmetic in the towers used by the checks.
//!
//! `cargo run --example field_towers`

use darboux::curve::u_cubic;
use darboux::exactfield::{rat, FieldTower};
use darboux::verify::proposition_tower;

fn main() -> darboux::error::Result<()> {
    let q7 = FieldTower::quadratic("s7", rat(7, 1))?;
    let s7 = q7.generator();
    let x = &q7.from_int(3) + &s7;
    let y = x.inv()?;
    println!("{q7}: 1/({x}) = {y}");
    println!("  conjugate {}, norm {}", x.conjugate("s7")?, &x * &x.conjugate("s7")?);

    let q37 = FieldTower::quadratic("s3", rat(3, 1))?.adjoin_sqrt("s7", &FieldTower::rationals().from_int(7))?;
    let s3 = q37.gen("s3").expect("s3");
    let s7 = q37.gen("s7").expect("s7");
    let r = &s7 * &s3.inv()?;
    println!("{q37}: sqrt(7/3) = {r}, squared {}", &r * &r);

    let t = proposition_tower()?;
    let u1 = t.gen("u1").expect("u1");
    let w = t.gen("w").expect("w");
    let cubic = u_cubic().lift(&t)?;
    println!("{t} of degree {}", t.degree());
    println!("  u_cubic(u1) = {}", cubic.eval(&u1)?);
    println!("  w^2 = {}", &w * &w);

    match FieldTower::quadratic("r", rat(9, 4)) {
        Ok(_) => println!("9/4 adjoined"),
        Err(e) => println!("adjoining sqrt(9/4) is rejected: {e}"),
    }
    Ok(())
}
