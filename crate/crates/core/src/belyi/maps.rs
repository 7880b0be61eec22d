//! The coverings of degree 7 and 21 and the polynomials they are built from.

use crate::exactfield::{int, rat, FieldTower, Poly};

use super::pattern::RatMap;

/// Polynomial over Q from `(numerator, denominator)` pairs, ascending.
pub fn qpoly(c: &[(i64, i64)]) -> Poly {
    Poly::from_rationals(
        &FieldTower::rationals(),
        &c.iter().map(|&(n, d)| rat(n, d)).collect::<Vec<_>>(),
    )
}

fn ipoly(c: &[i64]) -> Poly {
    Poly::from_ints(c)
}

/// `Q(i7)` with `i7² = −7`.
pub fn q_sqrt_m7() -> FieldTower {
    FieldTower::quadratic("i7", int(-7)).expect("valid quadratic extension")
}

/// `1 − x + x³/7`
pub fn p3() -> Poly {
    qpoly(&[(1, 1), (-1, 1), (0, 1), (1, 7)])
}

/// `(1 − 3x²/7)(1 − x + 2x²/7)(1 − 5x/4 + 11x²/28)`
pub fn q3() -> Poly {
    &(&qpoly(&[(1, 1), (0, 1), (-3, 7)]) * &qpoly(&[(1, 1), (-1, 1), (2, 7)]))
        * &qpoly(&[(1, 1), (-5, 4), (11, 28)])
}

/// `1 − x + x²/4 − x³/56`
pub fn p4() -> Poly {
    qpoly(&[(1, 1), (-1, 1), (1, 4), (-1, 56)])
}

/// `(1 − x²/28)(1 − x/2 + x²/14)`
pub fn q4() -> Poly {
    &qpoly(&[(1, 1), (0, 1), (-1, 28)]) * &qpoly(&[(1, 1), (-1, 2), (1, 14)])
}

/// Product of the two quartic factors in the degree-4 evaluations.
pub fn q8() -> Poly {
    &qpoly(&[(1, 1), (3, 1), (-9, 4), (1, 2), (-1, 28)])
        * &qpoly(&[(1, 1), (-5, 8), (3, 16), (-1, 32), (1, 448)])
}

/// `1 − 3x/8 + x²/28`
pub fn r1() -> Poly {
    qpoly(&[(1, 1), (-3, 8), (1, 28)])
}

/// The quartic `R₂` with a given `x²` coefficient.
pub fn r2_with(x2: (i64, i64)) -> Poly {
    qpoly(&[(1, 1), (-33, 32), x2, (-9, 128), (1, 224)])
}

/// `x³(3x²−7)³(2x²−7x+7)³(11x²−35x+28)³ / (1728(x³−7x+7)⁷)`
pub fn psi3() -> RatMap {
    let num = &(&(&ipoly(&[0, 0, 0, 1]) * &ipoly(&[-7, 0, 3]).pow(3)) * &ipoly(&[7, -7, 2]).pow(3))
        * &ipoly(&[28, -35, 11]).pow(3);
    let den = ipoly(&[7, -7, 0, 1]).pow(7).scale_rational(&int(1728));
    RatMap::new(num, den).expect("coprime")
}

/// `sign · 49x³Q₃³ / (27P₃⁷)`; the covering above equals the negative sign.
pub fn psi3_normalized(sign: i64) -> RatMap {
    let num = (&ipoly(&[0, 0, 0, 1]) * &q3().pow(3)).scale_rational(&int(49 * sign));
    let den = p3().pow(7).scale_rational(&int(27));
    RatMap::new(num, den).expect("coprime")
}

fn psi4_with(quadratic: Poly) -> RatMap {
    let num = &(&(&ipoly(&[0, 1]) * &quadratic.pow(2)) * &ipoly(&[-28, 0, 1]).pow(4))
        * &ipoly(&[14, -7, 1]).pow(4);
    let den = ipoly(&[-56, 56, -14, 1]).pow(7).scale_rational(&int(4));
    RatMap::new(num, den).expect("coprime")
}

/// Degree-21 covering with the quadratic factor `2x² − 21x + 56`.
pub fn psi4() -> RatMap {
    psi4_with(ipoly(&[56, -21, 2]))
}

/// Same covering with the factor printed as `2x² − 21 + 56`.
pub fn psi4_paper_literal() -> RatMap {
    psi4_with(ipoly(&[35, 0, 2]))
}

/// `z/1728 · (z + i7)³ (z + (7 + 5 i7)/2)³` over `Q(i7)`.
pub fn psi7() -> RatMap {
    let t = q_sqrt_m7();
    let i7 = t.generator();
    let z = Poly::x(&t);
    let lin1 = &z + &Poly::constant(i7.clone());
    let c = (&t.from_int(7) + &i7.scale(&int(5))).scale(&rat(1, 2));
    let lin2 = &z + &Poly::constant(c);
    let num = (&(&z * &lin1.pow(3)) * &lin2.pow(3)).scale_rational(&rat(1, 1728));
    RatMap::new(num, Poly::one(&t)).expect("coprime")
}

/// `(4x − 7 − i7)³ / ((20 − 4 i7)(x³ − 7x + 7))`
pub fn cubic() -> RatMap {
    let t = q_sqrt_m7();
    let i7 = t.generator();
    let lin = Poly::new(&t, vec![&t.from_int(-7) - &i7, t.from_int(4)]);
    let c = &t.from_int(20) - &i7.scale(&int(4));
    let den = ipoly(&[7, -7, 0, 1]).lift(&t).expect("Q embeds").scale(&c);
    RatMap::new(lin.pow(3), den).expect("coprime")
}

/// Named registry of the built-in maps.
pub fn builtin_maps() -> Vec<(&'static str, RatMap)> {
    vec![
        ("psi3", psi3()),
        ("psi3_normalized_corrected", psi3_normalized(-1)),
        ("psi3_normalized_paper_literal", psi3_normalized(1)),
        ("psi4", psi4()),
        ("psi4_paper_literal", psi4_paper_literal()),
        ("psi7", psi7()),
        ("cubic", cubic()),
    ]
}
