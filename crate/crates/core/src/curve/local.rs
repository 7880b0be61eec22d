use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactfield::{rat, FieldElement, FieldTower, Poly};
use crate::series::{shift_expand, RadicalSeries, TruncSeries};

use super::ffelem::{FFElem, HypCurve};

/// A point of `v² = u·q(u)`.
#[derive(Clone, Debug)]
pub enum CurvePoint {
    /// `v₀ ≠ 0`; local parameter `t = u − u₀`.
    Affine { u0: FieldElement, v0: FieldElement },
    /// `v₀ = 0`; local parameter `t = v`.
    Weierstrass { u0: FieldElement },
    /// The point at infinity.
    Infinity,
}

impl CurvePoint {
    /// Validates the coordinates; `v₀ = 0` yields a Weierstrass point.
    pub fn on(curve: &HypCurve, u0: FieldElement, v0: FieldElement) -> Result<Self> {
        let f0 = curve.rhs().eval(&u0)?;
        if &v0 * &v0 != f0 {
            return Err(Error::NotOnCurve(format!("({u0}, {v0})")));
        }
        Ok(if v0.is_zero() {
            CurvePoint::Weierstrass { u0 }
        } else {
            CurvePoint::Affine { u0, v0 }
        })
    }

    pub fn field(&self) -> FieldTower {
        match self {
            CurvePoint::Affine { u0, v0 } => u0.tower().common(v0.tower()).expect("compatible"),
            CurvePoint::Weierstrass { u0 } => u0.tower().clone(),
            CurvePoint::Infinity => FieldTower::rationals(),
        }
    }
}

/// Series of `u` and `v` in the local parameter, to order `n`.
pub fn local_coordinates(curve: &HypCurve, p: &CurvePoint, n: usize) -> Result<(TruncSeries, TruncSeries)> {
    match p {
        CurvePoint::Affine { u0, v0 } => {
            let f = shift_expand(curve.rhs(), u0, n)?;
            if f.coeff(0) != &(v0 * v0) {
                return Err(Error::NotOnCurve(format!("({u0}, {v0})")));
            }
            let v = f.ratpow_with_constant(&rat(1, 2), v0)?;
            let field = v.field().clone();
            let mut uc = vec![field.zero(); n];
            if n > 0 {
                uc[0] = u0.lift(&field)?;
            }
            if n > 1 {
                uc[1] = field.one();
            }
            Ok((TruncSeries::new(&field, uc), v))
        }
        CurvePoint::Weierstrass { u0 } => {
            let shifted = curve.rhs().taylor_shift(u0)?;
            if !shifted.coeff(0).is_zero() {
                return Err(Error::NotOnCurve(format!("({u0}, 0)")));
            }
            let field = shifted.field().clone();
            // u·q(u0 + s) = s·G(s); solve s = t²/G(s) by fixed-point iteration
            let g = TruncSeries::from_poly(&Poly::new(&field, shifted.coeffs()[1..].to_vec()), n);
            let t = TruncSeries::x(&field, n);
            let t2 = &t * &t;
            let mut s = TruncSeries::zero(&field, n);
            for _ in 0..n.div_ceil(2) + 1 {
                s = &t2 * &g.compose(&s)?.inv()?;
            }
            let mut u = s;
            if n > 0 {
                let mut c = u.coeffs().to_vec();
                c[0] = u0.lift(&field)?;
                u = TruncSeries::new(&field, c);
            }
            Ok((u, t))
        }
        CurvePoint::Infinity => Err(Error::UnsupportedPoint("the point at infinity".into())),
    }
}

fn eval_poly_series(p: &Poly, u: &TruncSeries) -> TruncSeries {
    let field = p.field().common(u.field()).expect("compatible towers");
    let u = u.lift(&field).expect("common tower");
    let mut acc = TruncSeries::zero(&field, u.order());
    for c in p.coeffs().iter().rev() {
        acc = &acc * &u;
        let mut co = acc.coeffs().to_vec();
        if let Some(first) = co.first_mut() {
            *first += c;
        }
        acc = TruncSeries::new(&field, co);
    }
    acc
}

fn expand_at(f: &FFElem, curve: &HypCurve, p: &CurvePoint, m: usize) -> Result<(RadicalSeries, RadicalSeries)> {
    let (u, v) = local_coordinates(curve, p, m)?;
    let num = &eval_poly_series(f.a(), &u) + &(&eval_poly_series(f.b(), &u) * &v);
    let den = eval_poly_series(f.d(), &u);
    Ok((RadicalSeries::from_series(&num), RadicalSeries::from_series(&den)))
}

/// Laurent expansion of `f` at `p` in the local parameter, `n` relative terms.
pub fn local_expand(f: &FFElem, p: &CurvePoint, n: usize) -> Result<RadicalSeries> {
    let curve: &Arc<HypCurve> = f.curve();
    if f.is_zero() {
        let field = f.field().common(&p.field()).expect("compatible towers");
        return Ok(RadicalSeries::zero(&field, rat(0, 1), n));
    }
    let mut m = n + 8;
    loop {
        let (num, den) = expand_at(f, curve, p, m)?;
        if den.is_zero() {
            if num.is_zero() || m > 8 * n + 64 {
                return Err(Error::DivisionByZero);
            }
            m *= 2;
            continue;
        }
        if num.is_zero() {
            if m > 8 * n + 64 {
                return Ok(RadicalSeries::zero(num.field(), num.offset().clone(), n));
            }
            m *= 2;
            continue;
        }
        if num.order() >= n && den.order() >= n {
            return Ok(num.checked_div(&den)?.truncate(n));
        }
        m += n - num.order().min(den.order());
    }
}
