//! Rational maps as Belyi maps: branching patterns, genus, composition.

pub mod maps;
mod pattern;

pub use maps::builtin_maps;
pub use pattern::{branching_pattern, riemann_hurwitz_genus, BranchPattern, Fiber, FiberPattern, RatMap};

use crate::error::Result;

/// True iff `outer ∘ inner = expected` as rational functions.
pub fn composition_check(outer: &RatMap, inner: &RatMap, expected: &RatMap) -> Result<bool> {
    let (n, d) = outer.substitute(inner.num(), inner.den());
    Ok(&n * expected.den() == &d * expected.num())
}

#[cfg(test)]
mod tests {
    use super::maps::*;
    use super::*;
    use crate::exactfield::{int, FieldTower, Poly};
    use proptest::prelude::*;

    #[test]
    fn degree_21_patterns() {
        let bp = branching_pattern(&psi3()).unwrap();
        assert_eq!(bp, BranchPattern::parse("3^7", "2^8 1^5", "7^3").unwrap());
        let bp = branching_pattern(&psi4()).unwrap();
        assert_eq!(bp, BranchPattern::parse("4^4 2^2 1", "2^8 1^5", "7^3").unwrap());
        let bp = branching_pattern(&psi7()).unwrap();
        assert_eq!(bp, BranchPattern::parse("3^2 1", "2^2 1^3", "7").unwrap());
        assert_eq!(bp.bracket([Fiber::One, Fiber::Zero, Fiber::Infinity]), "[2^2 1^3 / 3^2 1 / 7]");
    }

    #[test]
    fn literal_readings_change_the_patterns() {
        let lit = branching_pattern(&psi4_paper_literal()).unwrap();
        assert_ne!(lit, branching_pattern(&psi4()).unwrap());
        let lit = branching_pattern(&psi3_normalized(1)).unwrap();
        assert_eq!(lit.one, FiberPattern::parse("1^21").unwrap());
    }

    #[test]
    fn genus_values() {
        let g = |z: &str, o: &str, i: &str, d| {
            riemann_hurwitz_genus(&BranchPattern::parse(z, o, i).unwrap(), d).unwrap()
        };
        assert_eq!(g("3^7", "2^8 1^5", "7^3", 21), 0);
        assert_eq!(g("4^4 2^2 1", "2^8 1^5", "7^3", 21), 0);
        assert_eq!(g("7^3", "2^8 1^5", "7^3", 21), 2);
        assert_eq!(g("1", "1", "1", 1), 0);
        let bad = BranchPattern::parse("3^6", "2^8 1^5", "7^3").unwrap();
        assert!(riemann_hurwitz_genus(&bad, 21).is_err());
    }

    #[test]
    fn denominators_and_constants() {
        assert_eq!(
            psi3().den(),
            &Poly::from_ints(&[7, -7, 0, 1]).pow(7).scale_rational(&int(1728))
        );
        assert_eq!(
            psi4().den(),
            &Poly::from_ints(&[-56, 56, -14, 1]).pow(7).scale_rational(&int(4))
        );
        let lc = psi7().num().lc().unwrap().as_rational().unwrap();
        assert_eq!(lc, crate::exactfield::rat(1, 1728));
    }

    #[test]
    fn degree_seven_composition() {
        assert!(composition_check(&psi7(), &cubic(), &psi3()).unwrap());
        let x = RatMap::new(Poly::x(&FieldTower::rationals()), Poly::from_ints(&[1])).unwrap();
        assert!(composition_check(&psi3(), &x, &psi3()).unwrap());
        let t = q_sqrt_m7();
        let c = cubic();
        let wrong = RatMap::new(c.num() + &Poly::constant(t.one()), c.den().clone()).unwrap();
        assert!(!composition_check(&psi7(), &wrong, &psi3()).unwrap());
        assert_eq!(psi7().degree() * c.degree(), psi3().degree());
    }

    #[test]
    fn normalized_forms_differ_by_sign() {
        assert!(psi3_normalized(-1).same_function(&psi3()));
        assert!(psi3_normalized(1).same_function(&psi3().negated()));
    }

    #[test]
    fn non_coprime_rejected() {
        let p = Poly::from_ints(&[-1, 1]);
        assert!(matches!(RatMap::new(&p * &p, p.clone()), Err(crate::Error::NotCoprime)));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn pattern_is_mobius_invariant(a in -5i64..6, b in -5i64..6, c in -5i64..6, d in -5i64..6) {
            prop_assume!(a * d - b * c != 0);
            let m = RatMap::new(Poly::from_ints(&[b, a]), Poly::from_ints(&[d, c])).unwrap_or_else(|_| {
                // (ax + b)/(cx + d) with a common factor is constant; excluded above
                unreachable!()
            });
            let pulled = psi3().compose(&m).unwrap();
            prop_assert_eq!(branching_pattern(&pulled).unwrap(), branching_pattern(&psi3()).unwrap());
        }
    }
}
