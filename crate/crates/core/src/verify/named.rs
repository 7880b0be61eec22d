//! Exact series builders for the radical, dihedral and hypergeometric
//! functions the checks compare.

use crate::belyi::maps::{p3, qpoly, r1};
use crate::belyi::RatMap;
use crate::error::{Error, Result};
use crate::exactfield::{int, rat, FieldElement, FieldTower, Poly, Rational};
use crate::hypergeom::{hpg_series, HpgParams};
use crate::series::{expand_ratmap, RadicalSeries, TruncSeries};

/// Builds series to a fixed number of coefficients around `x = x₀`.
#[derive(Clone, Debug)]
pub struct Expander {
    n: usize,
    at: Option<FieldElement>,
}

impl Expander {
    /// Around `x = 0`.
    pub fn at_origin(n: usize) -> Self {
        Expander { n, at: None }
    }

    /// Around `x = x₀`; the local parameter is `t = x − x₀`.
    pub fn at_point(n: usize, x0: FieldElement) -> Self {
        Expander { n, at: Some(x0) }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    fn shifted(&self, p: &Poly) -> Result<Poly> {
        match &self.at {
            None => Ok(p.clone()),
            Some(x0) => p.taylor_shift(x0),
        }
    }

    /// `p` as a power series.
    pub fn poly(&self, p: &Poly) -> Result<TruncSeries> {
        Ok(TruncSeries::from_poly(&self.shifted(p)?, self.n))
    }

    /// `p` as a radical series (its valuation becomes the offset).
    pub fn radical_poly(&self, p: &Poly) -> Result<RadicalSeries> {
        Ok(RadicalSeries::from_series(&self.poly(p)?))
    }

    /// `(p / p(x₀))^e`, the branch equal to 1 at the expansion point.
    pub fn unit_pow(&self, p: &Poly, e: Rational) -> Result<TruncSeries> {
        let s = self.poly(p)?;
        let c0 = s.coeff(0).clone();
        if c0.is_zero() {
            return Err(Error::Normalization { found: "0".into() });
        }
        s.scale(&c0.inv()?).ratpow(&e)
    }

    /// `p^e` for `p(x₀) = 1`.
    pub fn pow(&self, p: &Poly, e: Rational) -> Result<TruncSeries> {
        self.poly(p)?.ratpow(&e)
    }

    /// `√p` with the given value at the expansion point.
    pub fn sqrt_with(&self, p: &Poly, value: &FieldElement) -> Result<TruncSeries> {
        self.poly(p)?.ratpow_with_constant(&rat(1, 2), value)
    }

    /// A rational map as a power series vanishing at the expansion point.
    pub fn argument(&self, m: &RatMap) -> Result<TruncSeries> {
        let num = self.shifted(m.num())?;
        let den = self.shifted(m.den())?;
        let r = expand_ratmap(&num, &den, self.n)?;
        Ok(r.to_trunc()?.truncate(self.n))
    }

    /// `F(α; β; z)` composed with a series `z` of positive valuation.
    pub fn hpg(&self, p: &HpgParams, z: &TruncSeries) -> Result<TruncSeries> {
        let v = z.valuation().unwrap_or(self.n).max(1);
        hpg_series(p, self.n.div_ceil(v) + 1)?.compose(z)
    }
}

/// Parameters from `(numerator, denominator)` pairs.
pub fn params(upper: &[(i64, i64)], lower: &[(i64, i64)]) -> HpgParams {
    HpgParams::from_pairs(upper, lower).expect("admissible parameters")
}

/// `Q(s7)` with `s7² = 7`.
pub fn q_sqrt7() -> FieldTower {
    FieldTower::quadratic("s7", int(7)).expect("7 is not a square")
}

/// `Q(s3)(s7)`
pub fn q_sqrt3_sqrt7() -> FieldTower {
    let t = FieldTower::quadratic("s3", int(3)).expect("3 is not a square");
    t.adjoin_sqrt("s7", &t.from_int(7)).expect("7 is not a square in Q(s3)")
}

/// Radical and dihedral solutions around `x = 0` over `Q(s7)`.
pub struct Degree3Basis {
    pub y0: TruncSeries,
    pub y1: TruncSeries,
    pub y2: TruncSeries,
    pub w1: TruncSeries,
    pub w2: TruncSeries,
    pub s7: FieldElement,
}

impl Degree3Basis {
    pub fn new(e: &Expander) -> Result<Self> {
        let t = q_sqrt7();
        let s7 = t.generator();
        let lift = |p: Poly| p.lift(&t).expect("Q embeds");
        let y0 = e.pow(&qpoly(&[(1, 1), (-2, 3)]), rat(1, 2))?;
        let root = e.sqrt_with(&lift(qpoly(&[(7, 1), (0, 1), (-21, 4), (0, 1), (1, 1)])), &s7)?;
        let base = e.poly(&lift(Poly::from_ints(&[21, 0, -8])))?;
        let eight_s = root.scale_rational(&int(8));
        let c1 = (&t.from_int(21) + &s7.scale(&int(8))).inv()?;
        let c2 = (&t.from_int(21) - &s7.scale(&int(8))).inv()?;
        let y1 = (&base + &eight_s).scale(&c1).ratpow(&rat(1, 4))?;
        let y2 = (&base - &eight_s).scale(&c2).ratpow(&rat(1, 4))?;
        let two_s = root.scale_rational(&int(2));
        let inv = s7.scale(&int(2)).inv()?;
        let w1 = (&e.poly(&lift(Poly::from_ints(&[0, -3, 2])))? + &two_s).scale(&inv);
        let w2 = (&e.poly(&lift(Poly::from_ints(&[0, 3, -2])))? + &two_s).scale(&inv);
        Ok(Degree3Basis { y0, y1, y2, w1, w2, s7 })
    }
}

/// The solutions normalized to 1 at `x = √(7/3)`, over `Q(s3)(s7)`, with the
/// local parameter `t = x − √(7/3)`.
pub struct TildeBasis {
    pub field: FieldTower,
    pub x0: FieldElement,
    pub y0: TruncSeries,
    pub y1: TruncSeries,
    pub y2: TruncSeries,
    /// `P̃₃ = −3(9 + 2√21)P₃`
    pub p3: Poly,
}

impl TildeBasis {
    pub fn new(n: usize) -> Result<Self> {
        let t = q_sqrt3_sqrt7();
        let s3 = t.gen("s3").expect("s3");
        let s7 = t.gen("s7").expect("s7");
        let x0 = (&s3 * &s7).scale(&rat(1, 3));
        let e = Expander::at_point(n, x0.clone());
        let lift = |p: Poly| p.lift(&t).expect("Q embeds");
        let c = &t.from_int(9) + &(&s3 * &s7).scale(&int(2));
        let y0 = e.poly(&lift(Poly::from_ints(&[-3, 2])).scale(&c))?.ratpow(&rat(1, 2))?;
        let root = e.sqrt_with(&lift(Poly::from_ints(&[28, 0, -21, 0, 4])), &s7.scale(&rat(1, 3)))?;
        let base = e.poly(&lift(Poly::from_ints(&[21, 0, -8])))?;
        let four_s = root.scale_rational(&int(4));
        let c1 = (&t.from_int(7) + &s7.scale(&int(4))).inv()?.scale(&int(3));
        let c2 = (&t.from_int(7) - &s7.scale(&int(4))).inv()?.scale(&int(3));
        let y1 = (&base + &four_s).scale(&c1).ratpow(&rat(1, 4))?;
        let y2 = (&base - &four_s).scale(&c2).ratpow(&rat(1, 4))?;
        let p3t = lift(p3()).scale(&c.scale(&int(-3)));
        Ok(TildeBasis {
            field: t,
            x0,
            y0,
            y1,
            y2,
            p3: p3t,
        })
    }
}

/// `R₂` with the derived `13/32` or the printed `13/22` quadratic coefficient.
pub fn r2(corrected: bool) -> Poly {
    crate::belyi::maps::r2_with(if corrected { (13, 32) } else { (13, 22) })
}

/// `K₁`, `K₂` and `√(R₁R₂)` around `x = 0`.
pub struct KFunctions {
    pub root: TruncSeries,
    pub k1: TruncSeries,
    pub k2: TruncSeries,
}

impl KFunctions {
    pub fn new(e: &Expander, r2: &Poly) -> Result<Self> {
        let root = e.pow(&(&r1() * r2), rat(1, 2))?;
        let half = root.scale_rational(&rat(1, 2));
        let k1 = (&half + &e.poly(&qpoly(&[(1, 2), (-45, 128), (5, 64), (-5, 896)]))?).ratpow(&rat(1, 4))?;
        let inner = &root + &e.poly(&qpoly(&[(-1, 1), (45, 64), (-5, 32), (5, 448)]))?;
        let q = FieldTower::rationals();
        let shifted = RadicalSeries::from_series(&inner)
            .checked_div(&RadicalSeries::monomial(int(2), q.from_rational(rat(625, 57344)), e.order()))?;
        if shifted.offset() != &int(0) {
            return Err(Error::Normalization {
                found: format!("x^{} leading term", crate::exactfield::fmt_rational(shifted.offset())),
            });
        }
        let k2 = shifted.ratpow(&rat(1, 4))?.to_trunc()?;
        Ok(KFunctions { root, k1, k2 })
    }
}

/// `Q(ξ)(σ)` with `ξ³ + ξ² − 2ξ − 1 = 0` (so `ξ = 2cos(2π/7)`) and
/// `σ² = 4x₀⁴ − 21x₀² + 28` at `x₀ = −ξ² − 2ξ + 1`; returns the tower and `x₀`.
pub fn p3_root_tower() -> Result<(FieldTower, FieldElement)> {
    let t = FieldTower::rationals().extend("xi", &Poly::from_ints(&[-1, -2, 1, 1]))?;
    let xi = t.generator();
    let x0 = &(&t.one() - &xi.scale(&int(2))) - &(&xi * &xi);
    let s2 = Poly::from_ints(&[28, 0, -21, 0, 4]).lift(&t)?.eval(&x0)?;
    let t = t.adjoin_sqrt("sigma", &s2)?;
    let x0 = x0.lift(&t)?;
    Ok((t, x0))
}

/// The companion solutions and the re-normalized `Y₀, Y₁, Y₂` around a root
/// `x₀` of `P₃`, all over `Q(ξ)(σ)` in `t = x − x₀`.
pub struct CompanionAtP3Root {
    pub field: FieldTower,
    pub x0: FieldElement,
    /// `Q̂₃^{1/14}F(−1/42, 13/42, 9/14; 4/7, 6/7; 1/Ψ₃)`, `P₃Q̂₃^{−5/14}F(5/42, 19/42, 11/14; 5/7, 8/7; 1/Ψ₃)`
    /// and `P₃³Q̂₃^{−17/14}F(17/42, 31/42, 15/14; 9/7, 10/7; 1/Ψ₃)` with `Q̂₃ = CxQ₃`, `Q̂₃(x₀) = 1`.
    pub companions: [TruncSeries; 3],
    /// `√(2x − 3)` and `(21 − 8x² ± 4√(4x⁴ − 21x² + 28))^{1/4}`, each equal to 1 at `x₀`.
    pub y: [TruncSeries; 3],
}

impl CompanionAtP3Root {
    pub fn new(n: usize) -> Result<Self> {
        let (t, x0) = p3_root_tower()?;
        let e = Expander::at_point(n, x0.clone());
        let lift = |p: Poly| p.lift(&t);
        let m = crate::belyi::maps::psi3();
        let z = e.argument(&RatMap::new(m.den().clone(), m.num().clone())?)?;
        if z.valuation() != Some(7) {
            return Err(Error::InvalidConfig("1/Psi3 should vanish to order 7 at a root of P3".into()));
        }
        let xq3 = lift(&Poly::from_ints(&[0, 1]) * &crate::belyi::maps::q3())?;
        let p3s = e.poly(&lift(p3())?)?;
        let f1 = &e.unit_pow(&xq3, rat(1, 14))? * &e.hpg(&params(&[(-1, 42), (13, 42), (9, 14)], &[(4, 7), (6, 7)]), &z)?;
        let f2 = &(&p3s * &e.unit_pow(&xq3, rat(-5, 14))?)
            * &e.hpg(&params(&[(5, 42), (19, 42), (11, 14)], &[(5, 7), (8, 7)]), &z)?;
        let f3 = &(&p3s.pow(3) * &e.unit_pow(&xq3, rat(-17, 14))?)
            * &e.hpg(&params(&[(17, 42), (31, 42), (15, 14)], &[(9, 7), (10, 7)]), &z)?;
        let sigma = t.gen("sigma").expect("sigma");
        let root = e.sqrt_with(&lift(Poly::from_ints(&[28, 0, -21, 0, 4]))?, &sigma)?;
        let base = e.poly(&lift(Poly::from_ints(&[21, 0, -8]))?)?;
        let four_s = root.scale_rational(&int(4));
        let unit = |s: TruncSeries, e: Rational| -> Result<TruncSeries> {
            let c = s.coeff(0).inv()?;
            s.scale(&c).ratpow(&e)
        };
        let y0 = e.unit_pow(&lift(Poly::from_ints(&[-3, 2]))?, rat(1, 2))?;
        let y1 = unit(&base + &four_s, rat(1, 4))?;
        let y2 = unit(&base - &four_s, rat(1, 4))?;
        Ok(CompanionAtP3Root {
            field: t,
            x0,
            companions: [f1, f2, f3],
            y: [y0, y1, y2],
        })
    }
}

/// Catalogue entry for a named function.
#[derive(Clone, Debug)]
pub struct NamedFunction {
    pub name: &'static str,
    pub definition: &'static str,
    pub tower: &'static str,
}

/// Named radical, dihedral and curve functions with their defining expressions.
pub fn named_functions() -> Vec<NamedFunction> {
    let f = |name, definition, tower| NamedFunction { name, definition, tower };
    vec![
        f("Y0", "sqrt(1 - 2x/3)", "Q"),
        f("Y1", "((21 - 8x^2 + 8 sqrt(7 - 21x^2/4 + x^4)) / (21 + 8 s7))^(1/4)", "Q(s7)"),
        f("Y2", "((21 - 8x^2 - 8 sqrt(7 - 21x^2/4 + x^4)) / (21 - 8 s7))^(1/4)", "Q(s7)"),
        f("Y0~", "sqrt((9 + 2 s3 s7)(2x - 3)), at x = sqrt(7/3)", "Q(s3)(s7)"),
        f("Y1~", "(3(21 - 8x^2 + 4 sqrt(4x^4 - 21x^2 + 28)) / (7 + 4 s7))^(1/4), at x = sqrt(7/3)", "Q(s3)(s7)"),
        f("Y2~", "(3(21 - 8x^2 - 4 sqrt(4x^4 - 21x^2 + 28)) / (7 - 4 s7))^(1/4), at x = sqrt(7/3)", "Q(s3)(s7)"),
        f("P3~", "-3(9 + 2 s3 s7) P3", "Q(s3)(s7)"),
        f("Y0^", "sqrt(2x - 3), equal to 1 at a root x0 of P3", "Q(xi)(sigma)"),
        f("Y1^", "(21 - 8x^2 + 4 sqrt(4x^4 - 21x^2 + 28))^(1/4), equal to 1 at x0", "Q(xi)(sigma)"),
        f("Y2^", "(21 - 8x^2 - 4 sqrt(4x^4 - 21x^2 + 28))^(1/4), equal to 1 at x0", "Q(xi)(sigma)"),
        f("Q3^", "C x Q3 with Q3^(x0) = 1", "Q(xi)"),
        f("W1", "(2x^2 - 3x + 2 sqrt(7 - 21x^2/4 + x^4)) / (2 s7)", "Q(s7)"),
        f("W2", "(3x - 2x^2 + 2 sqrt(7 - 21x^2/4 + x^4)) / (2 s7)", "Q(s7)"),
        f("K1", "(sqrt(R1 R2)/2 + 1/2 - 45x/128 + 5x^2/64 - 5x^3/896)^(1/4)", "Q"),
        f("K2", "((sqrt(R1 R2) - 1 + 45x/64 - 5x^2/32 + 5x^3/448) / (625x^2/57344))^(1/4)", "Q"),
        f("W7", "sqrt(2v + 3u - 14u^2) P7^(1/14) u^(-2/7) 3F2(-1/14, 1/14, 5/14; 1/7, 5/7; Psi7)", "Q(u1)(w)"),
        f("W0", "4u - 1", "Q"),
        f("W+", "(P1 + Q1 sqrt(56u - 21 + 2/u))^(1/4)", "Q(u1)(w)"),
        f("W-", "(P1 - Q1 sqrt(56u - 21 + 2/u))^(1/4)", "Q(u1)(w)"),
    ]
}
