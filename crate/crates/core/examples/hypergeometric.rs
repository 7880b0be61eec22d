//! 3F2 series, local exponents and companion solutions.
//!
//! `cargo run --example hypergeometric`

use darboux::hypergeom::{
    apply_hpg_operator, apply_hpg_operator_at_infinity, companion_basis, hpg_series, local_solution_series, psymbol,
    HpgParams, SingularPoint,
};
use darboux::series::RadicalSeries;

fn main() -> darboux::error::Result<()> {
    let p = HpgParams::from_pairs(&[(-1, 42), (5, 42), (17, 42)], &[(1, 3), (2, 3)])?;
    let f = hpg_series(&p, 8)?;
    println!("3F2({p}; z) = {f}");

    let ps = psymbol(&p)?;
    let show = |e: &[darboux::exactfield::Rational; 3]| e.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", ");
    println!("exponents at 0: {}; at 1: {}; at inf: {}", show(&ps.at_zero), show(&ps.at_one), show(&ps.at_infinity));
    println!("exponent sum {}", ps.exponent_sum());

    let residual = apply_hpg_operator(&p, &RadicalSeries::from_series(&hpg_series(&p, 20)?))?;
    println!("operator applied to the series vanishes to order 20: {}", residual.is_zero());

    for at in [SingularPoint::Zero, SingularPoint::Infinity] {
        for sol in companion_basis(&p, at)? {
            let s = local_solution_series(&sol, at, 12)?;
            let r = match at {
                SingularPoint::Zero => apply_hpg_operator(&p, &s)?,
                SingularPoint::Infinity => apply_hpg_operator_at_infinity(&p, &s)?,
            };
            println!("{at:?}: exponent {} with 3F2({}), annihilated {}", sol.offset, sol.params, r.is_zero());
        }
    }
    Ok(())
}
