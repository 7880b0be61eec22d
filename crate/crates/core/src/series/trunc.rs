use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactfield::{int, mul_coeffs, FieldElement, FieldTower, Poly, Rational};

/// A power series `c₀ + c₁x + … + c_{N−1}x^{N−1} + O(x^N)`.
///
/// The truncation order `N` is the coefficient count.
#[derive(Clone)]
pub struct TruncSeries {
    field: FieldTower,
    coeffs: Vec<FieldElement>,
}

impl TruncSeries {
    /// Lifts each coefficient into `field`; panics on an incompatible tower.
    pub fn new(field: &FieldTower, coeffs: Vec<FieldElement>) -> Self {
        let coeffs = coeffs
            .into_iter()
            .map(|c| c.lift(field).expect("coefficient outside the series field"))
            .collect();
        TruncSeries {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &FieldTower, order: usize) -> Self {
        TruncSeries {
            field: field.clone(),
            coeffs: vec![field.zero(); order],
        }
    }

    pub fn one(field: &FieldTower, order: usize) -> Self {
        Self::constant(field.one(), order)
    }

    pub fn constant(c: FieldElement, order: usize) -> Self {
        let field = c.tower().clone();
        let mut s = Self::zero(&field, order);
        if order > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    /// The series of `x`.
    pub fn x(field: &FieldTower, order: usize) -> Self {
        Self::from_poly(&Poly::x(field), order)
    }

    pub fn from_poly(p: &Poly, order: usize) -> Self {
        TruncSeries {
            field: p.field().clone(),
            coeffs: (0..order).map(|k| p.coeff(k)).collect(),
        }
    }

    pub fn from_rationals(field: &FieldTower, coeffs: &[Rational]) -> Self {
        TruncSeries {
            field: field.clone(),
            coeffs: coeffs.iter().map(|c| field.from_rational(c.clone())).collect(),
        }
    }

    pub fn field(&self) -> &FieldTower {
        &self.field
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &FieldElement {
        &self.coeffs[k]
    }

    /// Index of the first nonzero coefficient within the order.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn truncate(&self, order: usize) -> Self {
        TruncSeries {
            field: self.field.clone(),
            coeffs: self.coeffs[..order.min(self.order())].to_vec(),
        }
    }

    pub fn lift(&self, to: &FieldTower) -> Result<Self> {
        Ok(TruncSeries {
            field: to.clone(),
            coeffs: self.coeffs.iter().map(|c| c.lift(to)).collect::<Result<_>>()?,
        })
    }

    fn aligned(&self, other: &Self) -> (FieldTower, Self, Self) {
        let n = self.order().min(other.order());
        if self.field == other.field {
            return (self.field.clone(), self.truncate(n), other.truncate(n));
        }
        let t = self.field.common(&other.field).unwrap_or_else(|| {
            panic!("incompatible field towers {} and {}", self.field, other.field)
        });
        (
            t.clone(),
            self.truncate(n).lift(&t).expect("common tower"),
            other.truncate(n).lift(&t).expect("common tower"),
        )
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        let field = self.field.common(c.tower()).expect("compatible towers");
        TruncSeries {
            field,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        TruncSeries {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| a.scale(r)).collect(),
        }
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inv(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Ok(self.clone());
        }
        if self.coeffs[0].is_zero() {
            return Err(Error::Valuation {
                valuation: self.valuation().unwrap_or(n),
            });
        }
        let c0_inv = self.coeffs[0].inv()?;
        let mut out: Vec<FieldElement> = Vec::with_capacity(n);
        out.push(c0_inv.clone());
        for k in 1..n {
            let mut acc = self.field.zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &(&self.coeffs[j] * &out[k - j]);
                }
            }
            out.push(-(&acc * &c0_inv));
        }
        Ok(TruncSeries {
            field: self.field.clone(),
            coeffs: out,
        })
    }

    pub fn checked_div(&self, g: &Self) -> Result<Self> {
        Ok(self * &g.inv()?)
    }

    /// `self(g(x))` for `g` without constant term.
    ///
    /// The result order is `min(g.order, self.order · val(g))`.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        if g.order() > 0 && !g.coeffs[0].is_zero() {
            return Err(Error::Composition);
        }
        let v = g.valuation().unwrap_or(g.order()).max(1);
        let n = g.order().min(self.order().saturating_mul(v));
        let field = self.field.common(&g.field).expect("compatible towers");
        let g = g.truncate(n).lift(&field)?;
        let terms = n.div_ceil(v).min(self.order());
        let mut acc = TruncSeries::zero(&field, n);
        for k in (0..terms).rev() {
            acc = &acc * &g;
            if n > 0 {
                acc.coeffs[0] += &self.coeffs[k].lift(&field)?;
            }
        }
        Ok(acc)
    }

    /// The branch of `self^e` with constant term 1; requires `c₀ = 1`.
    pub fn ratpow(&self, e: &Rational) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Ok(self.clone());
        }
        if !self.coeffs[0].is_one() {
            return Err(Error::Normalization {
                found: self.coeffs[0].to_string(),
            });
        }
        let mut g: Vec<FieldElement> = Vec::with_capacity(n);
        g.push(self.field.one());
        // k g_k = Σ_{j=1..k} (e j − (k − j)) f_j g_{k−j}, from g′f = e f′g
        for k in 1..n {
            let mut acc = self.field.zero();
            for j in 1..=k {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                let w = e * int(j as i64) - int((k - j) as i64);
                if w.is_zero() {
                    continue;
                }
                acc += &(&self.coeffs[j] * &g[k - j]).scale(&w);
            }
            g.push(acc.scale(&Rational::from_integer((k as i64).into()).recip()));
        }
        Ok(TruncSeries {
            field: self.field.clone(),
            coeffs: g,
        })
    }

    /// `self^e` normalized so that its constant term is `lead`.
    ///
    /// `lead` must be an `e`-th power of `c₀`: with `e = p/q` in lowest
    /// terms, `lead^q = c₀^p`.
    pub fn ratpow_with_constant(&self, e: &Rational, lead: &FieldElement) -> Result<Self> {
        if self.order() == 0 {
            return Ok(self.clone());
        }
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::Valuation {
                valuation: self.valuation().unwrap_or(self.order()),
            });
        }
        let p: i64 = e.numer().try_into().map_err(|_| Error::Normalization {
            found: e.to_string(),
        })?;
        let q: i64 = e.denom().try_into().map_err(|_| Error::Normalization {
            found: e.to_string(),
        })?;
        if lead.powi(q)? != c0.powi(p)? {
            return Err(Error::Normalization {
                found: format!("({lead})^{q} != ({c0})^{p}"),
            });
        }
        let unit = self.scale(&c0.inv()?).ratpow(e)?;
        Ok(unit.scale(lead))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = TruncSeries::one(&self.field, self.order());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal derivative; the order drops by one.
    pub fn derivative(&self) -> Self {
        TruncSeries {
            field: self.field.clone(),
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&int(k as i64)))
                .collect(),
        }
    }

    /// Multiplies by `x^k`; the order grows by `k`.
    pub fn mul_x_pow(&self, k: usize) -> Self {
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        TruncSeries {
            field: self.field.clone(),
            coeffs,
        }
    }

    /// Divides by `x^k`; the first `k` coefficients must vanish.
    pub fn div_x_pow(&self, k: usize) -> Result<Self> {
        let k = k.min(self.order());
        if let Some(v) = self.valuation() {
            if v < k {
                return Err(Error::Valuation { valuation: v });
            }
        }
        Ok(TruncSeries {
            field: self.field.clone(),
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// First index where the two series differ within the common order.
    pub fn first_mismatch(&self, other: &Self) -> Option<usize> {
        let n = self.order().min(other.order());
        (0..n).find(|&k| self.coeffs[k] != other.coeffs[k])
    }

    /// One line per coefficient: `k: <element>`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            out.push_str(&format!("{k}: {c}\n"));
        }
        out
    }
}

impl PartialEq for TruncSeries {
    /// Coefficient-wise equality up to the common order.
    fn eq(&self, other: &Self) -> bool {
        self.first_mismatch(other).is_none()
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let cs = if cs.contains(' ') { format!("({cs})") } else { cs };
            terms.push(match k {
                0 => cs,
                1 => format!("{cs}*x"),
                _ => format!("{cs}*x^{k}"),
            });
        }
        terms.push(format!("O(x^{})", self.order()));
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over {}", self.field)
    }
}

impl<'a> Add<&'a TruncSeries> for &'a TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let (field, mut a, b) = self.aligned(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a.field = field;
        a
    }
}

impl<'a> Sub<&'a TruncSeries> for &'a TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        let (field, mut a, b) = self.aligned(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x -= y;
        }
        a.field = field;
        a
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Mul<&'a TruncSeries> for &'a TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let (field, a, b) = self.aligned(rhs);
        let n = a.order();
        if n == 0 {
            return a;
        }
        // drop trailing zeros so sparse operands stay cheap
        let la = a.coeffs.iter().rposition(|c| !c.is_zero()).map_or(0, |i| i + 1);
        let lb = b.coeffs.iter().rposition(|c| !c.is_zero()).map_or(0, |i| i + 1);
        if la == 0 || lb == 0 {
            return TruncSeries::zero(&field, n);
        }
        let mut coeffs = if la.min(lb) > crate::exactfield::KARATSUBA_THRESHOLD {
            mul_coeffs(&field, &a.coeffs[..la], &b.coeffs[..lb])
        } else {
            let mut out = vec![field.zero(); n];
            for (i, x) in a.coeffs[..la].iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in b.coeffs[..lb.min(n - i)].iter().enumerate() {
                    if !y.is_zero() {
                        out[i + j] += &(x * y);
                    }
                }
            }
            out
        };
        coeffs.resize(n, field.zero());
        coeffs.truncate(n);
        TruncSeries { field, coeffs }
    }
}

macro_rules! forward_series_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<TruncSeries> for TruncSeries {
            type Output = TruncSeries;
            fn $m(self, rhs: TruncSeries) -> TruncSeries {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a TruncSeries> for TruncSeries {
            type Output = TruncSeries;
            fn $m(self, rhs: &TruncSeries) -> TruncSeries {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<TruncSeries> for &'a TruncSeries {
            type Output = TruncSeries;
            fn $m(self, rhs: TruncSeries) -> TruncSeries {
                self.$m(&rhs)
            }
        }
    };
}

forward_series_binop!(Add, add);
forward_series_binop!(Sub, sub);
forward_series_binop!(Mul, mul);

impl Neg for TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        -&self
    }
}
