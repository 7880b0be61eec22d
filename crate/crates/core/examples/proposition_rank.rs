//! Four radical functions on the genus-2 curve spanning a 3-dimensional solution space.
//!
//! `cargo run --release --example proposition_rank -- [ORDER]`

use darboux::verify::{proposition_family, rank_check, solve_connection_constants};

fn main() -> darboux::error::Result<()> {
    let order = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(24);
    let fam = proposition_family(order)?;
    let field = fam[0].field().clone();
    println!("expansions at U1 over {field} to {order} coefficients");
    for (name, f) in ["W7", "W0", "W+", "W-"].iter().zip(&fam) {
        println!("  {name}: {}", f.truncate(4));
    }
    println!("rank {}", rank_check(&fam, order)?);
    let basis = [fam[1].clone(), fam[2].clone(), fam[3].clone()];
    let c = solve_connection_constants(&fam[0], &basis, order.min(12))?.expect("W7 in the span");
    println!("W7 = ({}) W0 + ({}) W+ + ({}) W-", c[0], c[1], c[2]);
    Ok(())
}
