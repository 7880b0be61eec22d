use crate::belyi::maps::{cubic, psi3, psi4, psi4_paper_literal, psi7};
use crate::belyi::{branching_pattern, composition_check, riemann_hurwitz_genus, BranchPattern, RatMap};
use crate::error::Result;
use crate::verify::{Ctx, Evidence};

fn pattern_item(ev: &mut Evidence, label: &str, m: &RatMap, want: (&str, &str, &str)) -> Result<()> {
    let got = branching_pattern(m)?;
    let want = BranchPattern::parse(want.0, want.1, want.2)?;
    ev.exact_with(format!("{label}: expected {want}"), got == want, format!("found {got}"));
    Ok(())
}

pub fn belyi_patterns(ctx: &Ctx) -> Result<Evidence> {
    let mut ev = Evidence::new();
    pattern_item(&mut ev, "Psi3", &psi3(), ("3^7", "2^8 1^5", "7^3"))?;
    let m4 = if ctx.corrected() { psi4() } else { psi4_paper_literal() };
    pattern_item(&mut ev, "Psi4", &m4, ("4^4 2^2 1", "2^8 1^5", "7^3"))?;
    pattern_item(&mut ev, "psi7", &psi7(), ("3^2 1", "2^2 1^3", "7"))?;
    Ok(ev)
}

/// The three degree-21 patterns and their expected genera.
pub const GENUS_CASES: [(&str, (&str, &str, &str), usize); 3] = [
    ("Psi3 pattern", ("3^7", "2^8 1^5", "7^3"), 0),
    ("Psi4 pattern", ("4^4 2^2 1", "2^8 1^5", "7^3"), 0),
    ("curve covering pattern", ("7^3", "2^8 1^5", "7^3"), 2),
];

pub fn rh_genus(_: &Ctx) -> Result<Evidence> {
    let mut ev = Evidence::new();
    for (label, (a, b, c), g) in GENUS_CASES {
        let found = riemann_hurwitz_genus(&BranchPattern::parse(a, b, c)?, 21)?;
        ev.exact_with(format!("{label} has genus {g}"), found == g, format!("genus {found}"));
    }
    Ok(ev)
}

pub fn compose_psi7(_: &Ctx) -> Result<Evidence> {
    let mut ev = Evidence::new();
    ev.exact(
        "psi7 composed with the cubic map equals Psi3 over Q(sqrt(-7))",
        composition_check(&psi7(), &cubic(), &psi3())?,
    );
    Ok(ev)
}
