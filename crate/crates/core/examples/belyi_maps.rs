//! Branching patterns, Riemann-Hurwitz genera and a composition identity.
//!
//! `cargo run --example belyi_maps`

use darboux::belyi::maps::{cubic, psi3, psi7};
use darboux::belyi::{branching_pattern, builtin_maps, composition_check, riemann_hurwitz_genus, BranchPattern};

fn main() -> darboux::error::Result<()> {
    for (name, m) in builtin_maps() {
        let bp = branching_pattern(&m)?;
        match riemann_hurwitz_genus(&bp, m.degree()) {
            Ok(g) => println!("{name:>30}: degree {:>2}, {bp}, genus {g}", m.degree()),
            Err(e) => println!("{name:>30}: degree {:>2}, {bp}, not a Belyi map ({e})", m.degree()),
        }
    }

    let covering = BranchPattern::parse("7^3", "2^8 1^5", "7^3")?;
    println!("{covering} over a degree-21 cover has genus {}", riemann_hurwitz_genus(&covering, 21)?);

    let holds = composition_check(&psi7(), &cubic(), &psi3())?;
    println!("psi7 composed with the cubic map equals Psi3: {holds}");
    Ok(())
}
