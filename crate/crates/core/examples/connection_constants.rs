//! Connection constants between hypergeometric and radical solutions.
//!
//! `cargo run --release --example connection_constants`

use darboux::belyi::maps::psi3;
use darboux::series::RadicalSeries;
use darboux::verify::named::{CompanionAtP3Root, Degree3Basis, Expander};
use darboux::verify::{rank_check, solve_connection_constants, theorem_constants, Degree3Sides};

fn main() -> darboux::error::Result<()> {
    let n = 30;
    let e = Expander::at_origin(n);
    let b = Degree3Basis::new(&e)?;
    let sides = Degree3Sides::new(&e, &psi3())?;
    let ys: Vec<RadicalSeries> = [&b.y0, &b.y1, &b.y2].into_iter().map(RadicalSeries::from_series).collect();
    let stated = theorem_constants(&b.s7);
    let solved = solve_connection_constants(&RadicalSeries::from_series(&sides.l0), &ys, 6)?.expect("in the span");
    println!("at x = 0 over {}:", b.s7.tower());
    for (k, (s, f)) in stated.iter().zip(&solved).enumerate() {
        println!("  c{k}: closed form {s}, solved {f}");
    }

    let c = CompanionAtP3Root::new(n)?;
    println!("at x0 = {} over {}:", c.x0, c.field);
    let ys: Vec<RadicalSeries> = c.y.iter().map(RadicalSeries::from_series).collect();
    println!("  rank of the radical solutions: {}", rank_check(&ys, n)?);
    for (i, f) in c.companions.iter().enumerate() {
        let k = solve_connection_constants(&RadicalSeries::from_series(f), &ys, 8)?.expect("in the span");
        let k: Vec<String> = k.iter().map(|x| x.to_string()).collect();
        println!("  companion {i} = [{}]", k.join(", "));
    }
    Ok(())
}
