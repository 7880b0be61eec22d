use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactfield::{rat, FieldElement, FieldTower, Poly};

/// The hyperelliptic curve `v² = u·q(u)` of genus 2.
#[derive(Debug, PartialEq)]
pub struct HypCurve {
    q: Poly,
    rhs: Poly,
}

/// A reduced quotient of polynomials in `u`.
#[derive(Clone, Debug)]
pub struct RatFunc {
    pub num: Poly,
    pub den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            let field = num.field().clone();
            return Ok(RatFunc {
                num,
                den: Poly::one(&field),
            });
        }
        let g = num.gcd(&den)?;
        let mut num = num.exact_div(&g)?.expect("gcd divides");
        let mut den = den.exact_div(&g)?.expect("gcd divides");
        let lc = den.lc().expect("nonzero").clone();
        if !lc.is_one() {
            let inv = lc.inv()?;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(RatFunc { num, den })
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl HypCurve {
    /// `u·q(u)` must be squarefree of degree 5.
    pub fn new(q: Poly) -> Result<Self> {
        let rhs = q.shift(1);
        if rhs.degree() != Some(5) {
            return Err(Error::BadCurve(format!(
                "u*q(u) has degree {:?}, expected 5",
                rhs.degree()
            )));
        }
        if !rhs.gcd(&rhs.derivative())?.is_one() {
            return Err(Error::BadCurve("u*q(u) is not squarefree".into()));
        }
        Ok(HypCurve { q, rhs })
    }

    /// `q(u) = 1 − 63u/4 + 91u² − 231u³ + 224u⁴`.
    pub fn h7() -> Arc<Self> {
        Arc::new(Self::new(h7_q(rat(-231, 1), 3)).expect("valid curve"))
    }

    /// The printed model whose cubic term reads as a second `−231u²`.
    pub fn h7_paper_literal() -> Arc<Self> {
        Arc::new(Self::new(h7_q(rat(-231, 1), 2)).expect("valid curve"))
    }

    pub fn q(&self) -> &Poly {
        &self.q
    }

    /// `u·q(u)`
    pub fn rhs(&self) -> &Poly {
        &self.rhs
    }
}

fn h7_q(c: crate::exactfield::Rational, at: usize) -> Poly {
    let mut coeffs = vec![rat(1, 1), rat(-63, 4), rat(91, 1), rat(0, 1), rat(224, 1)];
    coeffs[at] += c;
    Poly::from_rationals(&FieldTower::rationals(), &coeffs)
}

/// `(a(u) + b(u)·v) / d(u)` on a [`HypCurve`], with `d` monic and
/// `gcd(a, b, d) = 1`.
#[derive(Clone)]
pub struct FFElem {
    curve: Arc<HypCurve>,
    a: Poly,
    b: Poly,
    d: Poly,
}

impl FFElem {
    pub fn new(curve: &Arc<HypCurve>, a: Poly, b: Poly, d: Poly) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(FFElem {
            curve: curve.clone(),
            a,
            b,
            d,
        }
        .reduced())
    }

    /// `a(u) + b(u)·v`
    pub fn poly(curve: &Arc<HypCurve>, a: Poly, b: Poly) -> Self {
        let field = a.field().common(b.field()).expect("compatible towers");
        FFElem {
            curve: curve.clone(),
            a,
            b,
            d: Poly::one(&field),
        }
    }

    pub fn from_poly(curve: &Arc<HypCurve>, a: Poly) -> Self {
        let field = a.field().clone();
        Self::poly(curve, a, Poly::zero(&field))
    }

    pub fn constant(curve: &Arc<HypCurve>, c: FieldElement) -> Self {
        Self::from_poly(curve, Poly::constant(c))
    }

    pub fn u(curve: &Arc<HypCurve>) -> Self {
        Self::from_poly(curve, Poly::x(&FieldTower::rationals()))
    }

    pub fn v(curve: &Arc<HypCurve>) -> Self {
        let q = FieldTower::rationals();
        Self::poly(curve, Poly::zero(&q), Poly::one(&q))
    }

    pub fn curve(&self) -> &Arc<HypCurve> {
        &self.curve
    }

    pub fn a(&self) -> &Poly {
        &self.a
    }

    pub fn b(&self) -> &Poly {
        &self.b
    }

    pub fn d(&self) -> &Poly {
        &self.d
    }

    pub fn field(&self) -> FieldTower {
        let t = self.a.field().common(self.b.field()).expect("compatible towers");
        t.common(self.d.field()).expect("compatible towers")
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Invariant under `v ↦ −v`.
    pub fn is_sigma_invariant(&self) -> bool {
        self.b.is_zero()
    }

    fn reduced(mut self) -> Self {
        if self.d.is_constant() {
            let inv = self.d.coeff(0).inv().expect("nonzero denominator");
            if !inv.is_one() {
                self.a = self.a.scale(&inv);
                self.b = self.b.scale(&inv);
            }
            self.d = Poly::one(self.d.field());
            return self;
        }
        let mut g = self.d.gcd(&self.a).expect("d nonzero");
        if !g.is_one() {
            g = g.gcd(&self.b).expect("g nonzero");
        }
        if !g.is_one() {
            self.a = self.a.exact_div(&g).unwrap().expect("gcd divides");
            self.b = self.b.exact_div(&g).unwrap().expect("gcd divides");
            self.d = self.d.exact_div(&g).unwrap().expect("gcd divides");
        }
        let lc = self.d.lc().expect("nonzero").clone();
        if !lc.is_one() {
            let inv = lc.inv().expect("nonzero");
            self.a = self.a.scale(&inv);
            self.b = self.b.scale(&inv);
            self.d = self.d.scale(&inv);
        }
        self
    }

    fn same_curve(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.curve, &other.curve) || self.curve == other.curve {
            Ok(())
        } else {
            Err(Error::BadCurve("elements live on different curves".into()))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_curve(other)?;
        if self.d == other.d {
            return Ok(FFElem {
                curve: self.curve.clone(),
                a: &self.a + &other.a,
                b: &self.b + &other.b,
                d: self.d.clone(),
            }
            .reduced());
        }
        Ok(FFElem {
            curve: self.curve.clone(),
            a: &(&self.a * &other.d) + &(&other.a * &self.d),
            b: &(&self.b * &other.d) + &(&other.b * &self.d),
            d: &self.d * &other.d,
        }
        .reduced())
    }

    pub fn neg(&self) -> Self {
        FFElem {
            curve: self.curve.clone(),
            a: -&self.a,
            b: -&self.b,
            d: self.d.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_curve(other)?;
        let bb = &self.b * &other.b;
        let a = &(&self.a * &other.a) + &(&bb * &self.curve.rhs);
        let b = &(&self.a * &other.b) + &(&self.b * &other.a);
        let out = FFElem {
            curve: self.curve.clone(),
            a,
            b,
            d: &self.d * &other.d,
        };
        Ok(if self.d.is_one() && other.d.is_one() {
            out
        } else {
            out.reduced()
        })
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        FFElem {
            curve: self.curve.clone(),
            a: self.a.scale(c),
            b: self.b.scale(c),
            d: self.d.clone(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = FFElem::constant(&self.curve, self.field().one());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).expect("same curve");
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).expect("same curve");
            }
        }
        acc
    }

    /// `v ↦ −v`
    pub fn conjugate(&self) -> Self {
        FFElem {
            curve: self.curve.clone(),
            a: self.a.clone(),
            b: -&self.b,
            d: self.d.clone(),
        }
    }

    /// `f · σ(f)` as a rational function of `u`.
    pub fn norm(&self) -> Result<RatFunc> {
        let n = &(&self.a * &self.a) - &(&(&self.b * &self.b) * &self.curve.rhs);
        RatFunc::new(n, &self.d * &self.d)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = &(&self.a * &self.a) - &(&(&self.b * &self.b) * &self.curve.rhs);
        FFElem::new(&self.curve, &self.a * &self.d, -&(&self.b * &self.d), n)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.inv()?)
    }

    /// The rational function of `u` when `b = 0`.
    pub fn as_ratfunc(&self) -> Option<RatFunc> {
        self.b
            .is_zero()
            .then(|| RatFunc::new(self.a.clone(), self.d.clone()).expect("nonzero denominator"))
    }

    pub fn lift(&self, to: &FieldTower) -> Result<Self> {
        Ok(FFElem {
            curve: self.curve.clone(),
            a: self.a.lift(to)?,
            b: self.b.lift(to)?,
            d: self.d.lift(to)?,
        })
    }
}

impl PartialEq for FFElem {
    fn eq(&self, other: &Self) -> bool {
        self.same_curve(other).is_ok()
            && &self.a * &other.d == &other.a * &self.d
            && &self.b * &other.d == &other.b * &self.d
    }
}

impl fmt::Display for FFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = format!("({}) + ({})*v", self.a.display_var("u"), self.b.display_var("u"));
        if self.d.is_one() {
            f.write_str(&num)
        } else {
            write!(f, "[{num}] / ({})", self.d.display_var("u"))
        }
    }
}

impl fmt::Debug for FFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
