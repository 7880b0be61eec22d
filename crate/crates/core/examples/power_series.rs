//! Truncated and radical power series.
//!
//! `cargo run --example power_series`

use darboux::exactfield::{rat, FieldTower, Poly};
use darboux::series::{RadicalSeries, TruncSeries};

fn main() -> darboux::error::Result<()> {
    let q = FieldTower::rationals();
    let n = 10;
    let one_minus_4x = TruncSeries::from_poly(&Poly::from_ints(&[1, -4]), n);
    let central = one_minus_4x.ratpow(&rat(-1, 2))?;
    println!("(1 - 4x)^(-1/2) = {central}");

    let catalan = (&TruncSeries::one(&q, n) - &one_minus_4x.ratpow(&rat(1, 2))?)
        .div_x_pow(1)?
        .scale_rational(&rat(1, 2));
    println!("Catalan numbers: {catalan}");

    let exp_like = TruncSeries::from_poly(&Poly::from_ints(&[0, 1, 1]), n);
    let composed = central.compose(&exp_like)?;
    println!("(1 - 4(x + x^2))^(-1/2) = {composed}");

    let cube = TruncSeries::from_poly(&Poly::from_ints(&[1, 1]), n).ratpow(&rat(1, 3))?;
    println!("((1 + x)^(1/3))^3 = {}", cube.pow(3));

    let lhs = RadicalSeries::new(rat(1, 2), q.from_int(2), central.clone())?;
    let bumped = &central + &TruncSeries::x(&q, n).pow(5);
    let rhs = RadicalSeries::new(rat(1, 2), q.from_int(2), bumped)?;
    let cmp = lhs.compare(&rhs)?;
    println!("2 x^(1/2) (1 - 4x)^(-1/2): {lhs}");
    println!("  against a copy with x^5 added: compared {} coefficients, first mismatch at index {:?}", cmp.compared, cmp.mismatch.map(|m| m.index));
    Ok(())
}
