mod case3;
mod case4;
mod classical;
mod curve7;
mod exact;

use crate::belyi::RatMap;
use crate::exactfield::Poly;
use crate::verify::{
    CheckSpec, Reading, CURVE_CUBIC_TERM, PSI3_NORMALIZED_SIGN, PSI4_QUADRATIC_FACTOR, R2_QUADRATIC_COEFFICIENT,
    RADICAL_R1_POWER,
};

pub use case3::{theorem_constants, Degree3Sides};
pub use case4::derived_r2;
pub use classical::{cubic_transform, quadratic_transform, TRANSFORM_SAMPLES};
pub use curve7::{proposition_family, proposition_tower, rank_from_proposition};

pub(crate) fn ip(c: &[i64]) -> Poly {
    Poly::from_ints(c)
}

pub(crate) fn qp(c: &[(i64, i64)]) -> Poly {
    crate::belyi::maps::qpoly(c)
}

pub(crate) fn rmap(num: Poly, den: Poly) -> RatMap {
    RatMap::new(num, den).expect("coprime map")
}

const SERIES_ORDER: usize = 40;

fn spec(
    name: &'static str,
    anchor: &'static str,
    tower: &'static str,
    default_order: usize,
    reading: Option<Reading>,
    build: fn(&crate::verify::Ctx) -> crate::error::Result<crate::verify::Evidence>,
) -> CheckSpec {
    CheckSpec {
        name,
        anchor,
        tower,
        default_order,
        reading,
        build,
    }
}

pub fn all() -> Vec<CheckSpec> {
    let n = SERIES_ORDER;
    vec![
        spec("octa1", "octahedral evaluation of 2F1(5/24, 13/24; 5/4), \"For example\"", "Q", n, None, classical::octa1),
        spec("octa2", "octahedral evaluation of 2F1(1/6, 5/6; 5/4), \"For example\"", "Q", n, None, classical::octa2),
        spec(
            "octa_cubic_chain",
            "three-step chain from the cubic argument to a radical closed form",
            "Q",
            n,
            None,
            classical::octa_cubic_chain,
        ),
        spec(
            "klein_param",
            "\"gives a projective parametrization of the Klein quartic\"",
            "Q",
            n,
            None,
            classical::klein_param,
        ),
        spec(
            "quad_transform",
            "\"quadratic and cubic transformations\" of 3F2, quadratic case at sampled (a, b)",
            "Q",
            n,
            None,
            classical::quad_transform,
        ),
        spec(
            "cubic_transform",
            "\"quadratic and cubic transformations\" of 3F2, cubic case at sampled (a, b)",
            "Q",
            n,
            None,
            classical::cubic_transform_check,
        ),
        spec(
            "case7_cubic_rel",
            "degree-7 representatives \"related by cubic transformation\"",
            "Q",
            n,
            None,
            classical::case7_cubic_rel,
        ),
        spec(
            "case7_quad_rel",
            "degree-7 representatives related by a quadratic transformation",
            "Q",
            n,
            None,
            classical::case7_quad_rel,
        ),
        spec(
            "case3a_theorem",
            "degree-3 theorem, \"identities hold in a neighborhood\" of x = 0",
            "Q(s7)",
            60,
            None,
            case3::case3a_theorem,
        ),
        spec(
            "case3a_inverse",
            "Y0 \"can be expressed linearly in terms\" of the companion solutions",
            "Q(s7)",
            n,
            None,
            case3::case3a_inverse,
        ),
        spec(
            "case3a_tilde",
            "solutions \"normalized to have the value\" 1 at x = sqrt(7/3)",
            "Q(s3)(s7)",
            n,
            None,
            case3::case3a_tilde,
        ),
        spec(
            "case3b_identities",
            "the three dihedral identities with W1, W2",
            "Q(s7)",
            n,
            None,
            case3::case3b_identities,
        ),
        spec(
            "psi3_sign",
            "sign of the normalized degree-21 map 49x^3 Q3^3/(27 P3^7)",
            "Q(s7)",
            n,
            Some(PSI3_NORMALIZED_SIGN),
            case3::psi3_sign,
        ),
        spec(
            "case4a_theorem",
            "degree-4 theorem with K1, K2, \"They both have expansions 1+O(x)\"",
            "Q",
            n,
            None,
            case4::case4a_theorem,
        ),
        spec(
            "case4a_radical",
            "the two \"purely radical Darboux evaluations\"",
            "Q",
            n,
            Some(RADICAL_R1_POWER),
            case4::case4a_radical,
        ),
        spec(
            "case4a_split",
            "Psi4 = -343x R1^2 Q4^4/(32 P4^7) and Psi4 - 1 = -R2 Q8^2/P4^7",
            "Q",
            n,
            Some(R2_QUADRATIC_COEFFICIENT),
            case4::case4a_split,
        ),
        spec(
            "case4b_identities",
            "the five degree-4 displays that \"appear to always require extraneous factors\"",
            "Q",
            n,
            None,
            case4::case4b_identities,
        ),
        spec(
            "case7_proposition",
            "W7, W0, W+, W- \"satisfy the same linear differential equation of order 3\"",
            "Q(u1)(w)",
            60,
            None,
            curve7::case7_proposition,
        ),
        spec(
            "belyi_patterns",
            "branching patterns of Psi3, Psi4 and psi7",
            "Q(i7)",
            n,
            Some(PSI4_QUADRATIC_FACTOR),
            exact::belyi_patterns,
        ),
        spec(
            "rh_genus",
            "Riemann-Hurwitz genus of the three degree-21 patterns",
            "Q",
            n,
            None,
            exact::rh_genus,
        ),
        spec(
            "compose_psi7",
            "psi7 composed with the cubic map gives Psi3",
            "Q(i7)",
            n,
            None,
            exact::compose_psi7,
        ),
        spec(
            "fiber_product",
            "fiber product curve v^2 = u q(u) with the parametrization x(u, v)",
            "Q",
            n,
            Some(CURVE_CUBIC_TERM),
            curve7::fiber_product,
        ),
        spec(
            "psi4_relation",
            "function \"constructed from the fiber product\" and \"The substitution u=1/x gives\"",
            "Q",
            n,
            Some(PSI4_QUADRATIC_FACTOR),
            curve7::psi4_relation,
        ),
        spec(
            "divisor_norms",
            "divisors of 2v - 3u + 14u^2, its conjugate and P7 read from their norms",
            "Q",
            n,
            None,
            curve7::divisor_norms,
        ),
    ]
}
