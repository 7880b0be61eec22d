use std::fmt;

use num_traits::{One, Zero};

use super::trunc::TruncSeries;
use crate::error::{Error, Result};
use crate::exactfield::{fmt_rational, to_i64, FieldElement, FieldTower, Rational};

/// `scale · x^offset · unit(x)` with `unit(0) = 1` and a rational offset.
///
/// The zero series has `scale = 0`; its unit order still records the
/// precision.
#[derive(Clone)]
pub struct RadicalSeries {
    offset: Rational,
    scale: FieldElement,
    unit: TruncSeries,
}

/// Coefficient disagreement between two aligned series.
#[derive(Clone, Debug)]
pub struct Mismatch {
    pub index: usize,
    pub lhs: FieldElement,
    pub rhs: FieldElement,
}

/// Outcome of comparing two radical series term by term.
#[derive(Clone, Debug)]
pub struct Comparison {
    /// Exponent of the first compared term.
    pub offset: Rational,
    /// Number of coefficients compared.
    pub compared: usize,
    pub mismatch: Option<Mismatch>,
}

fn offset_gap(a: &Rational, b: &Rational) -> Result<i64> {
    let d = a - b;
    to_i64(&d).ok_or_else(|| Error::OffsetMismatch {
        left: a.clone(),
        right: b.clone(),
    })
}

impl RadicalSeries {
    /// Requires `unit` to start with 1.
    pub fn new(offset: Rational, scale: FieldElement, unit: TruncSeries) -> Result<Self> {
        if unit.order() > 0 && !unit.coeff(0).is_one() {
            return Err(Error::Normalization {
                found: unit.coeff(0).to_string(),
            });
        }
        let field = scale.tower().common(unit.field()).ok_or_else(|| Error::TowerMismatch {
            left: scale.tower().to_string(),
            right: unit.field().to_string(),
        })?;
        Ok(RadicalSeries {
            offset,
            scale: scale.lift(&field)?,
            unit: unit.lift(&field)?,
        })
    }

    /// Normalizes an ordinary series; the offset becomes its valuation.
    pub fn from_series(f: &TruncSeries) -> Self {
        match f.valuation() {
            None => Self::zero(f.field(), Rational::zero(), f.order()),
            Some(v) => {
                let c = f.coeff(v).clone();
                let unit = f
                    .div_x_pow(v)
                    .expect("valuation")
                    .scale(&c.inv().expect("nonzero"));
                RadicalSeries {
                    offset: Rational::from_integer((v as i64).into()),
                    scale: c,
                    unit,
                }
            }
        }
    }

    /// Zero, known through `x^{offset + order}`.
    pub fn zero(field: &FieldTower, offset: Rational, order: usize) -> Self {
        RadicalSeries {
            offset,
            scale: field.zero(),
            unit: TruncSeries::one(field, order),
        }
    }

    /// `scale · x^offset` to the given relative order.
    pub fn monomial(offset: Rational, scale: FieldElement, order: usize) -> Self {
        let field = scale.tower().clone();
        RadicalSeries {
            offset,
            scale,
            unit: TruncSeries::one(&field, order),
        }
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn scale(&self) -> &FieldElement {
        &self.scale
    }

    pub fn unit(&self) -> &TruncSeries {
        &self.unit
    }

    pub fn field(&self) -> &FieldTower {
        self.unit.field()
    }

    /// Relative order: number of known coefficients after `x^offset`.
    pub fn order(&self) -> usize {
        self.unit.order()
    }

    pub fn is_zero(&self) -> bool {
        self.scale.is_zero()
    }

    pub fn lift(&self, to: &FieldTower) -> Result<Self> {
        Ok(RadicalSeries {
            offset: self.offset.clone(),
            scale: self.scale.lift(to)?,
            unit: self.unit.lift(to)?,
        })
    }

    pub fn truncate(&self, order: usize) -> Self {
        RadicalSeries {
            offset: self.offset.clone(),
            scale: self.scale.clone(),
            unit: self.unit.truncate(order),
        }
    }

    /// Same series with `scale = 1`.
    pub fn normalized(&self) -> Self {
        RadicalSeries {
            offset: self.offset.clone(),
            scale: self.field().one(),
            unit: self.unit.clone(),
        }
    }

    pub fn mul_scalar(&self, c: &FieldElement) -> Self {
        let field = self.field().common(c.tower()).expect("compatible towers");
        RadicalSeries {
            offset: self.offset.clone(),
            scale: &self.scale * c,
            unit: self.unit.lift(&field).expect("common tower"),
        }
    }

    pub fn neg(&self) -> Self {
        RadicalSeries {
            offset: self.offset.clone(),
            scale: -&self.scale,
            unit: self.unit.clone(),
        }
    }

    /// Multiplies by `x^e`.
    pub fn shift(&self, e: &Rational) -> Self {
        RadicalSeries {
            offset: &self.offset + e,
            scale: self.scale.clone(),
            unit: self.unit.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let unit = &self.unit * &other.unit;
        RadicalSeries {
            offset: &self.offset + &other.offset,
            scale: &self.scale * &other.scale,
            unit,
        }
    }

    pub fn mul_series(&self, f: &TruncSeries) -> Self {
        self.mul(&Self::from_series(f))
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(RadicalSeries {
            offset: -&self.offset,
            scale: self.scale.inv()?,
            unit: self.unit.inv()?,
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    /// `self^e` on the branch whose scale is 1; needs `scale = 1`.
    pub fn ratpow(&self, e: &Rational) -> Result<Self> {
        if !self.scale.is_one() {
            return Err(Error::Normalization {
                found: self.scale.to_string(),
            });
        }
        self.ratpow_with_scale(e, &self.field().one())
    }

    /// `self^e` with an explicit scale `s` satisfying `s^q = scale^p`, `e = p/q`.
    pub fn ratpow_with_scale(&self, e: &Rational, s: &FieldElement) -> Result<Self> {
        let lead = TruncSeries::constant(self.scale.clone(), 1).ratpow_with_constant(e, s)?;
        Ok(RadicalSeries {
            offset: &self.offset * e,
            scale: lead.coeff(0).clone(),
            unit: self.unit.ratpow(e)?,
        })
    }

    pub fn pow(&self, k: u32) -> Self {
        RadicalSeries {
            offset: &self.offset * Rational::from_integer(k.into()),
            scale: self.scale.pow(k),
            unit: self.unit.pow(k),
        }
    }

    /// Coefficients of `x^{base + k}` for `k < n`; `base` may not exceed the offset.
    pub fn coefficients_from(&self, base: &Rational, n: usize) -> Result<Vec<FieldElement>> {
        let field = self.field();
        if self.is_zero() {
            return Ok(vec![field.zero(); n]);
        }
        let d = offset_gap(&self.offset, base)?;
        let d = usize::try_from(d).map_err(|_| Error::OffsetMismatch {
            left: self.offset.clone(),
            right: base.clone(),
        })?;
        Ok((0..n)
            .map(|k| {
                if k < d || k - d >= self.unit.order() {
                    field.zero()
                } else {
                    self.unit.coeff(k - d) * &self.scale
                }
            })
            .collect())
    }

    /// Absolute precision: exponent of the first unknown term.
    pub fn precision(&self) -> Rational {
        &self.offset + Rational::from_integer((self.unit.order() as i64).into())
    }

    /// Both series aligned at the lower offset, over their common range.
    fn aligned(&self, other: &Self) -> Result<(Rational, Vec<FieldElement>, Vec<FieldElement>)> {
        offset_gap(&self.offset, &other.offset)?;
        let base = if self.offset <= other.offset {
            self.offset.clone()
        } else {
            other.offset.clone()
        };
        let prec = std::cmp::min(self.precision(), other.precision());
        let n = to_i64(&(&prec - &base)).unwrap_or(0).max(0) as usize;
        let field = self.field().common(other.field()).ok_or_else(|| Error::TowerMismatch {
            left: self.field().to_string(),
            right: other.field().to_string(),
        })?;
        let a = self.lift(&field)?.coefficients_from(&base, n)?;
        let b = other.lift(&field)?.coefficients_from(&base, n)?;
        Ok((base, a, b))
    }

    /// Sum; offsets must differ by an integer.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            let p = std::cmp::min(self.precision(), other.precision());
            let o = std::cmp::min(self.offset.clone(), other.offset.clone());
            let n = to_i64(&(&p - &o)).unwrap_or(0).max(0) as usize;
            return Ok(Self::zero(self.field(), o, n));
        }
        let (base, a, b) = self.aligned(other)?;
        let field = a.first().map_or(self.field().clone(), |c| c.tower().clone());
        let sum = TruncSeries::new(&field, a.iter().zip(&b).map(|(x, y)| x + y).collect());
        let r = Self::from_series(&sum);
        Ok(if r.is_zero() {
            Self::zero(&field, base, sum.order())
        } else {
            r.shift(&base)
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Term-by-term comparison over the common precision.
    pub fn compare(&self, other: &Self) -> Result<Comparison> {
        let (base, a, b) = self.aligned(other)?;
        let mismatch = a
            .iter()
            .zip(&b)
            .position(|(x, y)| x != y)
            .map(|index| Mismatch {
                index,
                lhs: a[index].clone(),
                rhs: b[index].clone(),
            });
        Ok(Comparison {
            offset: base,
            compared: a.len(),
            mismatch,
        })
    }

    /// `d/dx`; the offset drops by one.
    pub fn derivative(&self) -> Self {
        let field = self.field().clone();
        let coeffs: Vec<FieldElement> = (0..self.order())
            .map(|k| {
                let e = &self.offset + Rational::from_integer((k as i64).into());
                (self.unit.coeff(k) * &self.scale).scale(&e)
            })
            .collect();
        let s = TruncSeries::new(&field, coeffs);
        let r = Self::from_series(&s);
        let shift = &self.offset - Rational::one();
        if r.is_zero() {
            Self::zero(&field, shift, s.order())
        } else {
            r.shift(&shift)
        }
    }

    /// An ordinary power series; the offset must be a nonnegative integer.
    pub fn to_trunc(&self) -> Result<TruncSeries> {
        let d = to_i64(&self.offset)
            .filter(|d| *d >= 0)
            .ok_or_else(|| Error::Valuation { valuation: 0 })? as usize;
        if self.is_zero() {
            return Ok(TruncSeries::zero(self.field(), d + self.order()));
        }
        Ok(self.unit.scale(&self.scale).mul_x_pow(d))
    }

    /// `scale` and the unit dump.
    pub fn dump(&self) -> String {
        format!(
            "offset: {}\nscale: {}\n{}",
            fmt_rational(&self.offset),
            self.scale,
            self.unit.dump()
        )
    }
}

impl fmt::Display for RadicalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) * x^({}) * ({})",
            self.scale,
            fmt_rational(&self.offset),
            self.unit
        )
    }
}

impl fmt::Debug for RadicalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over {}", self.field())
    }
}
