//! Towers of simple algebraic extensions over the rationals.
//!
//! An element of a tower `K_n = K_{n-1}[t]/(m(t))` is stored as one flat
//! vector of rationals: block `j` (of length `deg K_{n-1}`) holds the
//! coefficient of `t^j`, itself an element of `K_{n-1}` in the same layout.
//! Every level therefore sees its own elements as short polynomials over the
//! level below, and an element of a sub-tower embeds by zero padding.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::poly::Poly;
use super::rational::{fmt_rational, Rational};
use crate::error::{Error, Result};

/// A tower of field extensions `Q ⊂ Q(g1) ⊂ Q(g1)(g2) ⊂ …`.
///
/// Cloning is cheap; the levels are shared.
#[derive(Clone)]
pub struct FieldTower(Option<Arc<Step>>);

struct Step {
    base: FieldTower,
    name: String,
    /// Monic minimal polynomial over `base`, ascending; entry `i` is a flat
    /// base element.
    minpoly: Vec<Vec<Rational>>,
    step_degree: usize,
    degree: usize,
}

impl FieldTower {
    /// The empty tower, i.e. the rationals.
    pub fn rationals() -> Self {
        FieldTower(None)
    }

    /// `Q(√c)` with generator `name`; `c` must not be a rational square.
    pub fn quadratic(name: &str, c: Rational) -> Result<Self> {
        if is_rational_square(&c) {
            return Err(Error::InvalidExtension(format!(
                "{} is a square in Q",
                super::fmt_rational(&c)
            )));
        }
        Self::rationals().adjoin_sqrt(name, &FieldElement::from_rational(&Self::rationals(), c))
    }

    /// Degree over Q (product of the step degrees).
    pub fn degree(&self) -> usize {
        self.0.as_ref().map_or(1, |s| s.degree)
    }

    pub fn depth(&self) -> usize {
        let mut n = 0;
        let mut t = self;
        while let Some(step) = &t.0 {
            n += 1;
            t = &step.base;
        }
        n
    }

    pub fn is_rationals(&self) -> bool {
        self.0.is_none()
    }

    pub fn base(&self) -> Option<&FieldTower> {
        self.0.as_ref().map(|s| &s.base)
    }

    /// Degree of the top step (1 for Q).
    pub fn step_degree(&self) -> usize {
        self.0.as_ref().map_or(1, |s| s.step_degree)
    }

    pub fn generator_name(&self) -> Option<&str> {
        self.0.as_ref().map(|s| s.name.as_str())
    }

    /// Generator names, innermost first.
    pub fn generator_names(&self) -> Vec<String> {
        let mut names = Vec::new();
        let mut t = self;
        while let Some(step) = &t.0 {
            names.push(step.name.clone());
            t = &step.base;
        }
        names.reverse();
        names
    }

    fn step_degrees(&self) -> Vec<usize> {
        let mut degs = Vec::new();
        let mut t = self;
        while let Some(step) = &t.0 {
            degs.push(step.step_degree);
            t = &step.base;
        }
        degs.reverse();
        degs
    }

    /// Adjoins a root `name` of the monic polynomial `minpoly` (degree ≥ 2).
    ///
    /// Irreducibility is not checked here; a reducible polynomial surfaces
    /// later as [`Error::Reducible`] when some nonzero element fails to invert.
    pub fn extend(&self, name: &str, minpoly: &Poly) -> Result<FieldTower> {
        if !self.contains(minpoly.field()) {
            return Err(Error::InvalidExtension(format!(
                "minimal polynomial over {} does not live in {}",
                minpoly.field(),
                self
            )));
        }
        let deg = minpoly
            .degree()
            .ok_or_else(|| Error::InvalidExtension("zero minimal polynomial".into()))?;
        if deg < 2 {
            return Err(Error::InvalidExtension(format!(
                "minimal polynomial of `{name}` has degree {deg} < 2"
            )));
        }
        if !minpoly.coeff(deg).is_one() {
            return Err(Error::InvalidExtension(format!(
                "minimal polynomial of `{name}` is not monic"
            )));
        }
        if name.is_empty() || self.generator_names().iter().any(|n| n == name) {
            return Err(Error::InvalidExtension(format!(
                "generator name `{name}` is empty or already used"
            )));
        }
        let coeffs = (0..=deg)
            .map(|i| minpoly.coeff(i).lift(self).map(|e| e.coeffs))
            .collect::<Result<Vec<_>>>()?;
        Ok(FieldTower(Some(Arc::new(Step {
            base: self.clone(),
            name: name.to_string(),
            minpoly: coeffs,
            step_degree: deg,
            degree: deg * self.degree(),
        }))))
    }

    /// Adjoins `name` with `name² = c`.
    pub fn adjoin_sqrt(&self, name: &str, c: &FieldElement) -> Result<FieldTower> {
        let m = Poly::new(
            self,
            vec![-c.lift(self)?, self.zero(), self.one()],
        );
        self.extend(name, &m)
    }

    /// The generator adjoined by the top step. Panics on Q.
    pub fn generator(&self) -> FieldElement {
        let step = self.0.as_ref().expect("Q has no generator");
        let db = step.base.degree();
        let mut coeffs = vec![Rational::zero(); self.degree()];
        coeffs[db] = Rational::one();
        FieldElement {
            tower: self.clone(),
            coeffs,
        }
    }

    /// The generator called `name`, embedded in this tower.
    pub fn gen(&self, name: &str) -> Option<FieldElement> {
        let mut t = self;
        while let Some(step) = &t.0 {
            if step.name == name {
                return t.generator().lift(self).ok();
            }
            t = &step.base;
        }
        None
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::zero(self)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::one(self)
    }

    pub fn from_rational(&self, r: Rational) -> FieldElement {
        FieldElement::from_rational(self, r)
    }

    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement::from_rational(self, Rational::from_integer(n.into()))
    }

    fn same(&self, other: &FieldTower) -> bool {
        match (&self.0, &other.0) {
            (None, None) => true,
            (Some(a), Some(b)) => {
                Arc::ptr_eq(a, b)
                    || (a.name == b.name
                        && a.step_degree == b.step_degree
                        && a.minpoly == b.minpoly
                        && a.base.same(&b.base))
            }
            _ => false,
        }
    }

    /// True if `other` is this tower or one of its sub-towers.
    pub fn contains(&self, other: &FieldTower) -> bool {
        if other.depth() > self.depth() {
            return false;
        }
        let mut t = self;
        for _ in 0..(self.depth() - other.depth()) {
            t = t.base().expect("depth accounted for");
        }
        t.same(other)
    }

    /// The larger of two nested towers.
    pub fn common(&self, other: &FieldTower) -> Option<FieldTower> {
        if self.contains(other) {
            Some(self.clone())
        } else if other.contains(self) {
            Some(other.clone())
        } else {
            None
        }
    }

    /// Long description including minimal polynomials.
    pub fn describe(&self) -> String {
        let mut parts = vec!["Q".to_string()];
        let mut levels = Vec::new();
        let mut t = self;
        while let Some(step) = &t.0 {
            levels.push(step);
            t = &step.base;
        }
        for step in levels.into_iter().rev() {
            let terms: Vec<FieldElement> = step
                .minpoly
                .iter()
                .map(|c| FieldElement {
                    tower: step.base.clone(),
                    coeffs: c.clone(),
                })
                .collect();
            let p = Poly::new(&step.base, terms);
            parts.push(format!("[{}]/({})", step.name, p.display_var(&step.name)));
        }
        parts.concat()
    }
}

fn is_rational_square(c: &Rational) -> bool {
    use num_traits::Signed;
    if c.is_negative() {
        return false;
    }
    let sq = |n: &num_bigint::BigInt| {
        let r = n.sqrt();
        &r * &r == *n
    };
    sq(c.numer()) && sq(c.denom())
}

impl PartialEq for FieldTower {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl fmt::Display for FieldTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q")?;
        for n in self.generator_names() {
            write!(f, "({n})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FieldTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}

// ---------------------------------------------------------------------------
// raw arithmetic on flat coefficient vectors

fn is_zero_raw(a: &[Rational]) -> bool {
    a.iter().all(Zero::is_zero)
}

fn add_into(acc: &mut [Rational], b: &[Rational]) {
    for (x, y) in acc.iter_mut().zip(b) {
        if !y.is_zero() {
            *x += y;
        }
    }
}

fn sub_into(acc: &mut [Rational], b: &[Rational]) {
    for (x, y) in acc.iter_mut().zip(b) {
        if !y.is_zero() {
            *x -= y;
        }
    }
}

fn mul_raw(t: &FieldTower, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let step = match &t.0 {
        None => return vec![&a[0] * &b[0]],
        Some(s) => s,
    };
    let db = step.base.degree();
    let d = step.step_degree;
    let mut prod = vec![vec![Rational::zero(); db]; 2 * d - 1];
    for i in 0..d {
        let ai = &a[i * db..(i + 1) * db];
        if is_zero_raw(ai) {
            continue;
        }
        for j in 0..d {
            let bj = &b[j * db..(j + 1) * db];
            if is_zero_raw(bj) {
                continue;
            }
            let p = mul_raw(&step.base, ai, bj);
            add_into(&mut prod[i + j], &p);
        }
    }
    for k in (d..2 * d - 1).rev() {
        if is_zero_raw(&prod[k]) {
            continue;
        }
        let c = std::mem::take(&mut prod[k]);
        for i in 0..d {
            let m = &step.minpoly[i];
            if is_zero_raw(m) {
                continue;
            }
            let p = mul_raw(&step.base, &c, m);
            sub_into(&mut prod[k - d + i], &p);
        }
    }
    prod.truncate(d);
    prod.into_iter().flatten().collect()
}

// Polynomials over a base level, coefficients as flat vectors.
type RawPoly = Vec<Vec<Rational>>;

fn trim_raw(p: &mut RawPoly) {
    while p.last().is_some_and(|c| is_zero_raw(c)) {
        p.pop();
    }
}

fn raw_poly_mul(base: &FieldTower, a: &RawPoly, b: &RawPoly) -> RawPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let db = base.degree();
    let mut out = vec![vec![Rational::zero(); db]; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if is_zero_raw(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if is_zero_raw(y) {
                continue;
            }
            add_into(&mut out[i + j], &mul_raw(base, x, y));
        }
    }
    trim_raw(&mut out);
    out
}

fn raw_poly_sub(base: &FieldTower, a: &RawPoly, b: &RawPoly) -> RawPoly {
    let db = base.degree();
    let n = a.len().max(b.len());
    let mut out = vec![vec![Rational::zero(); db]; n];
    for (i, x) in a.iter().enumerate() {
        add_into(&mut out[i], x);
    }
    for (i, y) in b.iter().enumerate() {
        sub_into(&mut out[i], y);
    }
    trim_raw(&mut out);
    out
}

fn raw_poly_divrem(base: &FieldTower, a: &RawPoly, b: &RawPoly) -> Result<(RawPoly, RawPoly)> {
    let db = base.degree();
    let lb = b.last().ok_or(Error::DivisionByZero)?;
    let lc_inv = inv_raw(base, lb)?;
    let mut r = a.clone();
    trim_raw(&mut r);
    if r.len() < b.len() {
        return Ok((Vec::new(), r));
    }
    let mut q = vec![vec![Rational::zero(); db]; r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = mul_raw(base, r.last().unwrap(), &lc_inv);
        for (i, bc) in b.iter().enumerate() {
            sub_into(&mut r[shift + i], &mul_raw(base, &c, bc));
        }
        q[shift] = c;
        // the leading entry is now zero by construction
        r.pop();
        trim_raw(&mut r);
    }
    trim_raw(&mut q);
    Ok((q, r))
}

fn inv_raw(t: &FieldTower, a: &[Rational]) -> Result<Vec<Rational>> {
    if is_zero_raw(a) {
        return Err(Error::DivisionByZero);
    }
    let step = match &t.0 {
        None => return Ok(vec![a[0].recip()]),
        Some(s) => s,
    };
    let base = &step.base;
    let db = base.degree();
    let d = step.step_degree;

    let mut r1: RawPoly = a.chunks(db).map(<[Rational]>::to_vec).collect();
    trim_raw(&mut r1);
    let mut r0: RawPoly = step.minpoly.clone();
    // s_i tracks the cofactor of `a`: s_i * a ≡ r_i (mod minpoly)
    let mut s0: RawPoly = Vec::new();
    let mut s1: RawPoly = vec![FieldElement::one(base).coeffs];
    while !r1.is_empty() {
        let (q, r) = raw_poly_divrem(base, &r0, &r1)?;
        let s2 = raw_poly_sub(base, &s0, &raw_poly_mul(base, &q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if r0.len() > 1 {
        // gcd with the minimal polynomial is a proper factor
        let lc_inv = inv_raw(base, r0.last().unwrap())?;
        let monic: Vec<FieldElement> = r0
            .iter()
            .map(|c| FieldElement {
                tower: base.clone(),
                coeffs: mul_raw(base, c, &lc_inv),
            })
            .collect();
        return Err(Error::Reducible {
            generator: step.name.clone(),
            factor: Poly::new(base, monic).display_var(&step.name),
        });
    }
    let c_inv = inv_raw(base, &r0[0])?;
    let minpoly = step.minpoly.clone();
    let (_, s) = raw_poly_divrem(base, &s0, &minpoly)?;
    let mut out = vec![Rational::zero(); d * db];
    for (j, c) in s.iter().enumerate() {
        out[j * db..(j + 1) * db].clone_from_slice(&mul_raw(base, c, &c_inv));
    }
    Ok(out)
}

fn conjugate_raw(t: &FieldTower, a: &[Rational], name: &str) -> Result<Vec<Rational>> {
    let step = t.0.as_ref().ok_or_else(|| {
        Error::InvalidExtension(format!("no generator named `{name}` in the tower"))
    })?;
    let db = step.base.degree();
    if step.name == name {
        if step.step_degree != 2 || !is_zero_raw(&step.minpoly[1]) {
            return Err(Error::InvalidExtension(format!(
                "conjugation of `{name}` needs a minimal polynomial t^2 - c"
            )));
        }
        let mut out = a.to_vec();
        for x in &mut out[db..] {
            *x = -x.clone();
        }
        return Ok(out);
    }
    for m in &step.minpoly {
        if conjugate_raw(&step.base, m, name)? != *m {
            return Err(Error::InvalidExtension(format!(
                "conjugating `{name}` does not fix the minimal polynomial of `{}`",
                step.name
            )));
        }
    }
    let mut out = Vec::with_capacity(a.len());
    for block in a.chunks(db) {
        out.extend(conjugate_raw(&step.base, block, name)?);
    }
    Ok(out)
}

fn format_raw(t: &FieldTower, a: &[Rational]) -> String {
    let names = t.generator_names();
    let degs = t.step_degrees();
    let mut terms: Vec<String> = Vec::new();
    for (idx, c) in a.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut rest = idx;
        let mut mono = Vec::new();
        for (name, &d) in names.iter().zip(&degs) {
            let e = rest % d;
            rest /= d;
            match e {
                0 => {}
                1 => mono.push(name.clone()),
                _ => mono.push(format!("{name}^{e}")),
            }
        }
        let mono = mono.join("*");
        let term = if mono.is_empty() {
            fmt_rational(c)
        } else if c.is_one() {
            mono
        } else if (-c).is_one() {
            format!("-{mono}")
        } else {
            format!("{}*{mono}", fmt_rational(c))
        };
        terms.push(term);
    }
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = terms[0].clone();
    for term in &terms[1..] {
        match term.strip_prefix('-') {
            Some(rest) => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            None => {
                out.push_str(" + ");
                out.push_str(term);
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------

/// An element of a [`FieldTower`].
#[derive(Clone)]
pub struct FieldElement {
    tower: FieldTower,
    coeffs: Vec<Rational>,
}

impl FieldElement {
    /// Builds an element from its flat coefficient vector. Panics on a length
    /// other than the tower degree.
    pub fn new(tower: &FieldTower, coeffs: Vec<Rational>) -> Self {
        assert_eq!(coeffs.len(), tower.degree(), "coefficient vector length");
        FieldElement {
            tower: tower.clone(),
            coeffs,
        }
    }

    pub fn zero(tower: &FieldTower) -> Self {
        FieldElement {
            tower: tower.clone(),
            coeffs: vec![Rational::zero(); tower.degree()],
        }
    }

    pub fn one(tower: &FieldTower) -> Self {
        Self::from_rational(tower, Rational::one())
    }

    pub fn from_rational(tower: &FieldTower, r: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); tower.degree()];
        coeffs[0] = r;
        FieldElement {
            tower: tower.clone(),
            coeffs,
        }
    }

    pub fn tower(&self) -> &FieldTower {
        &self.tower
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        is_zero_raw(&self.coeffs)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && is_zero_raw(&self.coeffs[1..])
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        if is_zero_raw(&self.coeffs[1..]) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Embeds into a tower containing this element's tower.
    pub fn lift(&self, to: &FieldTower) -> Result<FieldElement> {
        if self.tower.same(to) {
            return Ok(self.clone());
        }
        if !to.contains(&self.tower) {
            return Err(Error::TowerMismatch {
                left: self.tower.to_string(),
                right: to.to_string(),
            });
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(to.degree(), Rational::zero());
        Ok(FieldElement {
            tower: to.clone(),
            coeffs,
        })
    }

    fn aligned(&self, other: &FieldElement) -> (FieldTower, FieldElement, FieldElement) {
        if self.tower.same(&other.tower) {
            return (self.tower.clone(), self.clone(), other.clone());
        }
        let t = self.tower.common(&other.tower).unwrap_or_else(|| {
            panic!("incompatible field towers {} and {}", self.tower, other.tower)
        });
        let a = self.lift(&t).expect("common tower");
        let b = other.lift(&t).expect("common tower");
        (t, a, b)
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(FieldElement {
            tower: self.tower.clone(),
            coeffs: inv_raw(&self.tower, &self.coeffs)?,
        })
    }

    pub fn checked_div(&self, other: &FieldElement) -> Result<FieldElement> {
        let (t, a, b) = self.try_aligned(other)?;
        let inv = inv_raw(&t, &b.coeffs)?;
        Ok(FieldElement {
            coeffs: mul_raw(&t, &a.coeffs, &inv),
            tower: t,
        })
    }

    fn try_aligned(&self, other: &FieldElement) -> Result<(FieldTower, FieldElement, FieldElement)> {
        if self.tower.common(&other.tower).is_none() {
            return Err(Error::TowerMismatch {
                left: self.tower.to_string(),
                right: other.tower.to_string(),
            });
        }
        Ok(self.aligned(other))
    }

    pub fn pow(&self, k: u32) -> FieldElement {
        let mut acc = FieldElement::one(&self.tower);
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

    /// Integer power; negative exponents invert.
    pub fn powi(&self, k: i64) -> Result<FieldElement> {
        let p = self.pow(k.unsigned_abs() as u32);
        if k < 0 {
            p.inv()
        } else {
            Ok(p)
        }
    }

    /// Applies the automorphism `g ↦ -g` for the quadratic generator `g`.
    pub fn conjugate(&self, generator: &str) -> Result<FieldElement> {
        Ok(FieldElement {
            tower: self.tower.clone(),
            coeffs: conjugate_raw(&self.tower, &self.coeffs, generator)?,
        })
    }

    pub fn scale(&self, r: &Rational) -> FieldElement {
        FieldElement {
            tower: self.tower.clone(),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        if self.tower.same(&other.tower) {
            return self.coeffs == other.coeffs;
        }
        match self.tower.common(&other.tower) {
            Some(_) => {
                let (_, a, b) = self.aligned(other);
                a.coeffs == b.coeffs
            }
            None => false,
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_raw(&self.tower, &self.coeffs))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.tower)
    }
}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        let (t, mut a, b) = self.aligned(rhs);
        add_into(&mut a.coeffs, &b.coeffs);
        a.tower = t;
        a
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        let (t, mut a, b) = self.aligned(rhs);
        sub_into(&mut a.coeffs, &b.coeffs);
        a.tower = t;
        a
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        if self.tower.same(&rhs.tower) {
            return FieldElement {
                tower: self.tower.clone(),
                coeffs: mul_raw(&self.tower, &self.coeffs, &rhs.coeffs),
            };
        }
        let (t, a, b) = self.aligned(rhs);
        FieldElement {
            coeffs: mul_raw(&t, &a.coeffs, &b.coeffs),
            tower: t,
        }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            tower: self.tower.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(mut self) -> FieldElement {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<FieldElement> for &'a FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl AddAssign<&FieldElement> for FieldElement {
    fn add_assign(&mut self, rhs: &FieldElement) {
        if self.tower.same(&rhs.tower) {
            add_into(&mut self.coeffs, &rhs.coeffs);
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&FieldElement> for FieldElement {
    fn sub_assign(&mut self, rhs: &FieldElement) {
        if self.tower.same(&rhs.tower) {
            sub_into(&mut self.coeffs, &rhs.coeffs);
        } else {
            *self = &*self - rhs;
        }
    }
}

impl MulAssign<&FieldElement> for FieldElement {
    fn mul_assign(&mut self, rhs: &FieldElement) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rational::{int, rat};
    use proptest::prelude::*;

    fn q() -> FieldTower {
        FieldTower::rationals()
    }

    fn q_sqrt7() -> FieldTower {
        FieldTower::quadratic("s7", int(7)).unwrap()
    }

    fn q_sqrt3_sqrt7() -> FieldTower {
        let t = FieldTower::quadratic("s3", int(3)).unwrap();
        t.adjoin_sqrt("s7", &t.from_int(7)).unwrap()
    }

    fn q_xi() -> FieldTower {
        let m = Poly::from_ints(&[-1, -2, 1, 1]);
        q().extend("xi", &m).unwrap()
    }

    #[test]
    fn extension_degrees() {
        assert_eq!(q().degree(), 1);
        assert_eq!(q_sqrt7().degree(), 2);
        assert_eq!(q_sqrt3_sqrt7().degree(), 4);
        assert_eq!(q_xi().degree(), 3);
        assert_eq!(q_sqrt3_sqrt7().to_string(), "Q(s3)(s7)");
    }

    #[test]
    fn extension_rejects_bad_minimal_polynomials() {
        let lin = Poly::from_ints(&[-7, 1]);
        assert!(matches!(q().extend("a", &lin), Err(Error::InvalidExtension(_))));
        let nonmonic = Poly::from_ints(&[-7, 0, 2]);
        assert!(matches!(q().extend("a", &nonmonic), Err(Error::InvalidExtension(_))));
        let t = q_sqrt7();
        assert!(matches!(
            t.adjoin_sqrt("s7", &t.from_int(3)),
            Err(Error::InvalidExtension(_))
        ));
    }

    #[test]
    fn sqrt7_arithmetic() {
        let t = q_sqrt7();
        let s = t.generator();
        let a = &t.from_int(3) + &s;
        let b = &t.from_int(3) - &s;
        assert_eq!(&a * &b, t.from_int(2));
        let inv = s.inv().unwrap();
        assert_eq!(inv, s.scale(&rat(1, 7)));
        assert_eq!(inv.to_string(), "1/7*s7");
    }

    #[test]
    fn compositum_contains_sqrt21() {
        let t = q_sqrt3_sqrt7();
        let s21 = &t.gen("s3").unwrap() * &t.gen("s7").unwrap();
        assert_eq!(&s21 * &s21, t.from_int(21));
        assert_eq!(s21.to_string(), "s3*s7");
    }

    #[test]
    fn minimal_polynomials_vanish_on_generators() {
        let t = q_xi();
        let xi = t.generator();
        let v = &(&xi.pow(3) + &xi.pow(2)) - &(&xi.scale(&int(2)) + &t.one());
        assert!(v.is_zero());
        let t = q_sqrt3_sqrt7();
        for (g, c) in [("s3", 3), ("s7", 7)] {
            let x = t.gen(g).unwrap();
            assert_eq!(&x * &x, t.from_int(c));
        }
    }

    #[test]
    fn division_by_zero_is_reported() {
        let t = q_sqrt7();
        assert!(matches!(t.zero().inv(), Err(Error::DivisionByZero)));
        assert!(matches!(
            t.one().checked_div(&t.zero()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn reducible_minimal_polynomial_is_trapped() {
        // t^2 - 4 = (t - 2)(t + 2)
        assert!(FieldTower::quadratic("r", int(4)).is_err());
        assert!(FieldTower::quadratic("r", int(0)).is_err());
        let t = FieldTower::rationals().extend("r", &Poly::from_ints(&[-4, 0, 1])).unwrap();
        let g = t.generator();
        let zero_divisor = &g - &t.from_int(2);
        match zero_divisor.inv() {
            Err(Error::Reducible { generator, factor }) => {
                assert_eq!(generator, "r");
                assert_eq!(factor, "r - 2");
            }
            other => panic!("expected reducibility error, got {other:?}"),
        }
    }

    #[test]
    fn inversion_in_towers() {
        let t = q_sqrt3_sqrt7();
        let s3 = t.gen("s3").unwrap();
        let s7 = t.gen("s7").unwrap();
        let a = &(&t.from_int(2) + &s3) + &(&s7 * &s3);
        assert_eq!(&a.inv().unwrap() * &a, t.one());
        let x = q_xi();
        let xi = x.generator();
        let b = &xi.pow(2) - &x.from_int(5);
        assert_eq!(&b * &b.inv().unwrap(), x.one());
    }

    #[test]
    fn sub_tower_elements_lift() {
        let big = q_sqrt3_sqrt7();
        let small = FieldTower::quadratic("s3", int(3)).unwrap();
        assert!(big.contains(&small));
        assert!(big.contains(&q()));
        assert!(!small.contains(&big));
        let s3 = small.generator();
        let sum = &s3 + &big.gen("s7").unwrap();
        assert_eq!(sum.tower(), &big);
        assert_eq!(sum.to_string(), "s3 + s7");
        assert!(q_sqrt7().common(&small).is_none());
    }

    #[test]
    fn conjugation_flips_quadratic_generators() {
        let t = q_sqrt3_sqrt7();
        let s3 = t.gen("s3").unwrap();
        let s7 = t.gen("s7").unwrap();
        let a = &(&t.from_int(1) + &s3) + &(&s3 * &s7);
        assert_eq!(a.conjugate("s7").unwrap().to_string(), "1 + s3 - s3*s7");
        assert_eq!(a.conjugate("s3").unwrap().to_string(), "1 - s3 - s3*s7");
        assert!(q_xi().generator().conjugate("xi").is_err());
    }

    fn elem_in(t: FieldTower) -> impl Strategy<Value = FieldElement> {
        let d = t.degree();
        proptest::collection::vec((-30i64..30, 1i64..9), d)
            .prop_map(move |v| FieldElement::new(&t, v.into_iter().map(|(n, k)| rat(n, k)).collect()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn conjugation_is_an_automorphism(a in elem_in(q_sqrt3_sqrt7()), b in elem_in(q_sqrt3_sqrt7())) {
            for g in ["s3", "s7"] {
                let ca = a.conjugate(g).unwrap();
                let cb = b.conjugate(g).unwrap();
                prop_assert_eq!((&a * &b).conjugate(g).unwrap(), &ca * &cb);
                prop_assert_eq!((&a + &b).conjugate(g).unwrap(), &ca + &cb);
            }
        }

        #[test]
        fn division_inverts_multiplication(a in elem_in(q_xi()), b in elem_in(q_xi())) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a);
        }

        #[test]
        fn multiplication_is_associative(a in elem_in(q_sqrt3_sqrt7()), b in elem_in(q_sqrt3_sqrt7()), c in elem_in(q_sqrt3_sqrt7())) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }
    }
}
