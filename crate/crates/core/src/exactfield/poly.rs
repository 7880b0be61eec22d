//! Dense univariate polynomials over a field tower.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::rational::{int, Rational};
use super::tower::{FieldElement, FieldTower};
use crate::error::{Error, Result};

/// Operand length above which multiplication switches to Karatsuba.
pub const KARATSUBA_THRESHOLD: usize = 32;

/// A polynomial with coefficients in a [`FieldTower`], ascending order.
///
/// The coefficient list never ends in a zero; the zero polynomial is empty.
#[derive(Clone)]
pub struct Poly {
    field: FieldTower,
    coeffs: Vec<FieldElement>,
}

impl Poly {
    /// Builds a polynomial, lifting every coefficient into `field`. Panics if
    /// a coefficient lives in an incompatible tower.
    pub fn new(field: &FieldTower, coeffs: Vec<FieldElement>) -> Self {
        let coeffs = coeffs
            .into_iter()
            .map(|c| c.lift(field).expect("coefficient outside the polynomial's field"))
            .collect();
        let mut p = Poly {
            field: field.clone(),
            coeffs,
        };
        p.trim();
        p
    }

    pub fn from_rationals(field: &FieldTower, coeffs: &[Rational]) -> Self {
        Poly::new(
            field,
            coeffs.iter().map(|c| field.from_rational(c.clone())).collect(),
        )
    }

    /// Integer coefficients over Q.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        let q = FieldTower::rationals();
        Poly::from_rationals(&q, &coeffs.iter().map(|&c| int(c)).collect::<Vec<_>>())
    }

    pub fn zero(field: &FieldTower) -> Self {
        Poly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &FieldTower) -> Self {
        Poly::constant(field.one())
    }

    pub fn constant(c: FieldElement) -> Self {
        let field = c.tower().clone();
        Poly::new(&field, vec![c])
    }

    /// The variable `x`.
    pub fn x(field: &FieldTower) -> Self {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    /// `c·x^k`.
    pub fn monomial(c: FieldElement, k: usize) -> Self {
        let field = c.tower().clone();
        let mut coeffs = vec![field.zero(); k];
        coeffs.push(c);
        Poly::new(&field, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(FieldElement::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &FieldTower {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> FieldElement {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Leading coefficient.
    pub fn lc(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn lift(&self, to: &FieldTower) -> Result<Poly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.lift(to))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly {
            field: to.clone(),
            coeffs,
        })
    }

    fn aligned(&self, other: &Poly) -> (FieldTower, Poly, Poly) {
        if self.field == other.field {
            return (self.field.clone(), self.clone(), other.clone());
        }
        let t = self.field.common(&other.field).unwrap_or_else(|| {
            panic!("incompatible field towers {} and {}", self.field, other.field)
        });
        (
            t.clone(),
            self.lift(&t).expect("common tower"),
            other.lift(&t).expect("common tower"),
        )
    }

    pub fn scale(&self, c: &FieldElement) -> Poly {
        let field = self.field.common(c.tower()).expect("compatible towers");
        Poly::new(&field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale_rational(&self, r: &Rational) -> Poly {
        Poly::new(&self.field, self.coeffs.iter().map(|a| a.scale(r)).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly {
            field: self.field.clone(),
            coeffs,
        }
    }

    /// Quotient and remainder.
    pub fn divrem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (field, a, d) = self.try_aligned(d)?;
        let dn = d.coeffs.len();
        let lc_inv = d.coeffs[dn - 1].inv()?;
        let mut r = a.coeffs;
        if r.len() < dn {
            return Ok((Poly::zero(&field), Poly { field, coeffs: r }));
        }
        let mut q = vec![field.zero(); r.len() - dn + 1];
        for shift in (0..q.len()).rev() {
            let top = &r[shift + dn - 1];
            if top.is_zero() {
                continue;
            }
            let c = top * &lc_inv;
            for (i, dc) in d.coeffs.iter().enumerate().take(dn - 1) {
                if !dc.is_zero() {
                    r[shift + i] -= &(&c * dc);
                }
            }
            r[shift + dn - 1] = field.zero();
            q[shift] = c;
        }
        r.truncate(dn - 1);
        let mut q = Poly {
            field: field.clone(),
            coeffs: q,
        };
        let mut r = Poly { field, coeffs: r };
        q.trim();
        r.trim();
        Ok((q, r))
    }

    /// `self / d` if the division is exact.
    pub fn exact_div(&self, d: &Poly) -> Result<Option<Poly>> {
        let (q, r) = self.divrem(d)?;
        Ok(r.is_zero().then_some(q))
    }

    fn try_aligned(&self, other: &Poly) -> Result<(FieldTower, Poly, Poly)> {
        if self.field.common(&other.field).is_none() {
            return Err(Error::TowerMismatch {
                left: self.field.to_string(),
                right: other.field.to_string(),
            });
        }
        Ok(self.aligned(other))
    }

    pub fn monic(&self) -> Result<Poly> {
        let lc = self.lc().ok_or(Error::ZeroPolynomial)?;
        if lc.is_one() {
            return Ok(self.clone());
        }
        Ok(self.scale(&lc.inv()?))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (_, mut a, mut b) = self.try_aligned(other)?;
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = if r.is_zero() { r } else { r.monic()? };
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            &self.field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&int(k as i64)))
                .collect(),
        )
    }

    /// Monic squarefree factors with strictly increasing multiplicities, so
    /// that `self = lc · ∏ fᵢ^{mᵢ}` (Yun's algorithm).
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Poly, usize)>> {
        let f = self.monic()?;
        let mut out = Vec::new();
        if f.is_constant() {
            return Ok(out);
        }
        let df = f.derivative();
        let b = f.gcd(&df)?;
        let mut c = f.exact_div(&b)?.expect("gcd divides");
        let mut d = &df.exact_div(&b)?.expect("gcd divides") - &c.derivative();
        let mut i = 1;
        while !c.is_one() {
            let a = c.gcd(&d)?;
            c = c.exact_div(&a)?.expect("gcd divides");
            d = &d.exact_div(&a)?.expect("gcd divides") - &c.derivative();
            if !a.is_constant() {
                out.push((a, i));
            }
            i += 1;
        }
        Ok(out)
    }

    /// Evaluation at a point of this field or of an extension.
    pub fn eval(&self, a: &FieldElement) -> Result<FieldElement> {
        let field = self.field.common(a.tower()).ok_or_else(|| Error::TowerMismatch {
            left: self.field.to_string(),
            right: a.tower().to_string(),
        })?;
        let a = a.lift(&field)?;
        let mut acc = field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &a) + c;
        }
        Ok(acc)
    }

    pub fn eval_rational(&self, r: &Rational) -> FieldElement {
        self.eval(&self.field.from_rational(r.clone()))
            .expect("rationals embed everywhere")
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one(&self.field);
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

    /// `self(g(x))`.
    pub fn compose(&self, g: &Poly) -> Poly {
        let field = self.field.common(&g.field).expect("compatible towers");
        let mut acc = Poly::zero(&field);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Poly::constant(c.clone());
        }
        acc
    }

    /// Coefficients of `self(x0 + t)` as a polynomial in `t`.
    pub fn taylor_shift(&self, x0: &FieldElement) -> Result<Poly> {
        let field = self.field.common(x0.tower()).ok_or_else(|| Error::TowerMismatch {
            left: self.field.to_string(),
            right: x0.tower().to_string(),
        })?;
        let x0 = x0.lift(&field)?;
        let mut c: Vec<FieldElement> = self
            .coeffs
            .iter()
            .map(|a| a.lift(&field))
            .collect::<Result<_>>()?;
        let n = c.len();
        // repeated synthetic division by (x - x0)
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let t = &c[j + 1] * &x0;
                c[j] += &t;
            }
        }
        Ok(Poly::new(&field, c))
    }

    /// `x^n · self(1/x)` for `n ≥ deg`.
    pub fn reverse(&self, n: usize) -> Poly {
        let mut coeffs = vec![self.field.zero(); n + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[n - k] = c.clone();
        }
        Poly::new(&self.field, coeffs)
    }

    /// Formats with the given variable name, highest degree first.
    pub fn display_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            let cs = c.to_string();
            let compound = cs[1..].contains([' ']);
            let (neg, body) = if !compound && cs.starts_with('-') {
                (true, cs[1..].to_string())
            } else {
                (false, cs)
            };
            let term = if mono.is_empty() {
                body
            } else if body == "1" {
                mono
            } else if compound {
                format!("({body})*{mono}")
            } else {
                format!("{body}*{mono}")
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&term);
        }
        out
    }
}

fn add_slices(a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (x, y) in out.iter_mut().zip(short) {
        *x += y;
    }
    out
}

fn schoolbook(field: &FieldTower, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += &(x * y);
            }
        }
    }
    out
}

fn karatsuba(field: &FieldTower, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len().min(b.len()) <= KARATSUBA_THRESHOLD {
        return schoolbook(field, a, b);
    }
    let m = a.len().max(b.len()) / 2;
    let (a0, a1) = a.split_at(m.min(a.len()));
    let (b0, b1) = b.split_at(m.min(b.len()));
    let z0 = karatsuba(field, a0, b0);
    let z2 = karatsuba(field, a1, b1);
    let z1 = karatsuba(field, &add_slices(a0, a1), &add_slices(b0, b1));
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, c) in z0.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in z2.iter().enumerate() {
        out[i + 2 * m] += c;
    }
    for (i, c) in z1.iter().enumerate() {
        let mut mid = c.clone();
        if let Some(x) = z0.get(i) {
            mid -= x;
        }
        if let Some(x) = z2.get(i) {
            mid -= x;
        }
        if !mid.is_zero() {
            out[i + m] += &mid;
        }
    }
    out
}

/// Product of two coefficient slices (Karatsuba above the threshold).
pub(crate) fn mul_coeffs(field: &FieldTower, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    karatsuba(field, a, b)
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs.len() == other.coeffs.len()
            && self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a == b)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_var("x"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self, self.field)
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (field, a, b) = self.aligned(rhs);
        Poly::new(&field, add_slices(&a.coeffs, &b.coeffs))
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let (field, a, b) = self.aligned(rhs);
        let coeffs = mul_coeffs(&field, &a.coeffs, &b.coeffs);
        Poly::new(&field, coeffs)
    }
}

macro_rules! forward_poly_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Poly> for &'a Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                self.$m(&rhs)
            }
        }
    };
}

forward_poly_binop!(Add, add);
forward_poly_binop!(Sub, sub);
forward_poly_binop!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
