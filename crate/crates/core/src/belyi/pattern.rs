use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactfield::{FieldElement, FieldTower, Poly};

/// A rational function `num/den` in lowest terms.
#[derive(Clone, Debug)]
pub struct RatMap {
    num: Poly,
    den: Poly,
}

impl RatMap {
    /// Rejects a zero denominator, common factors and constant maps.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let field = num.field().common(den.field()).ok_or_else(|| Error::TowerMismatch {
            left: num.field().to_string(),
            right: den.field().to_string(),
        })?;
        let (num, den) = (num.lift(&field)?, den.lift(&field)?);
        if !num.is_zero() && !num.gcd(&den)?.is_one() {
            return Err(Error::NotCoprime);
        }
        let m = RatMap { num, den };
        if m.degree() == 0 {
            return Err(Error::InconsistentPattern("constant map".into()));
        }
        Ok(m)
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn field(&self) -> &FieldTower {
        self.num.field()
    }

    /// `max(deg num, deg den)`.
    pub fn degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    pub fn negated(&self) -> RatMap {
        RatMap {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    /// Equality as rational functions.
    pub fn same_function(&self, other: &RatMap) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    /// Numerator and denominator of `self(a/b)`, homogenized to `deg self`.
    pub fn substitute(&self, a: &Poly, b: &Poly) -> (Poly, Poly) {
        let n = self.degree();
        let hom = |p: &Poly| {
            let mut acc = Poly::zero(&a.field().common(p.field()).expect("compatible towers"));
            let mut apow = Vec::with_capacity(n + 1);
            let mut cur = Poly::one(a.field());
            for _ in 0..=n {
                apow.push(cur.clone());
                cur = &cur * a;
            }
            let mut bpow = Poly::one(b.field());
            for k in (0..=n).rev() {
                let c = p.coeff(k);
                if !c.is_zero() {
                    acc = &acc + &(&apow[k] * &bpow).scale(&c);
                }
                bpow = &bpow * b;
            }
            acc
        };
        (hom(&self.num), hom(&self.den))
    }

    /// `self ∘ inner`, reduced to lowest terms.
    pub fn compose(&self, inner: &RatMap) -> Result<RatMap> {
        let (n, d) = self.substitute(&inner.num, &inner.den);
        let g = n.gcd(&d)?;
        let n = n.exact_div(&g)?.expect("gcd divides");
        let d = d.exact_div(&g)?.expect("gcd divides");
        RatMap::new(n, d)
    }

    /// Value at a finite point (error at a pole).
    pub fn eval(&self, x: &FieldElement) -> Result<FieldElement> {
        self.num.eval(x)?.checked_div(&self.den.eval(x)?)
    }
}

/// The three special fibers of a Belyi map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Fiber {
    Zero,
    One,
    Infinity,
}

impl fmt::Display for Fiber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Fiber::Zero => "0",
            Fiber::One => "1",
            Fiber::Infinity => "inf",
        })
    }
}

/// Multiset of ramification indices: multiplicity ↦ number of points.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FiberPattern(pub BTreeMap<usize, usize>);

impl FiberPattern {
    /// Parses space-separated `m^c` or `m` tokens, e.g. `"4^4 2^2 1"`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut map = BTreeMap::new();
        for tok in s.split_whitespace() {
            let bad = || Error::InconsistentPattern(format!("bad token `{tok}`"));
            let (m, c) = match tok.split_once('^') {
                Some((m, c)) => (m.parse().map_err(|_| bad())?, c.parse().map_err(|_| bad())?),
                None => (tok.parse().map_err(|_| bad())?, 1usize),
            };
            if m == 0 || c == 0 {
                return Err(bad());
            }
            *map.entry(m).or_insert(0) += c;
        }
        Ok(FiberPattern(map))
    }

    fn add(&mut self, mult: usize, count: usize) {
        if count > 0 {
            *self.0.entry(mult).or_insert(0) += count;
        }
    }

    /// `Σ multiplicity · count`.
    pub fn total(&self) -> usize {
        self.0.iter().map(|(m, c)| m * c).sum()
    }

    /// `Σ (multiplicity − 1) · count`.
    pub fn ramification(&self) -> usize {
        self.0.iter().map(|(m, c)| (m - 1) * c).sum()
    }

    pub fn points(&self) -> usize {
        self.0.values().sum()
    }
}

impl fmt::Display for FiberPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .rev()
            .map(|(m, c)| if *c == 1 { m.to_string() } else { format!("{m}^{c}") })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Ramification over 0, 1 and ∞, each fiber labeled.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BranchPattern {
    pub zero: FiberPattern,
    pub one: FiberPattern,
    pub infinity: FiberPattern,
}

impl BranchPattern {
    pub fn parse(zero: &str, one: &str, infinity: &str) -> Result<Self> {
        Ok(BranchPattern {
            zero: FiberPattern::parse(zero)?,
            one: FiberPattern::parse(one)?,
            infinity: FiberPattern::parse(infinity)?,
        })
    }

    pub fn fiber(&self, which: Fiber) -> &FiberPattern {
        match which {
            Fiber::Zero => &self.zero,
            Fiber::One => &self.one,
            Fiber::Infinity => &self.infinity,
        }
    }

    /// Unlabeled bracket `[a/b/c]` listing the fibers in the given order.
    pub fn bracket(&self, order: [Fiber; 3]) -> String {
        let parts: Vec<String> = order.iter().map(|f| self.fiber(*f).to_string()).collect();
        format!("[{}]", parts.join(" / "))
    }
}

impl fmt::Display for BranchPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[0: {} / 1: {} / inf: {}]",
            self.zero, self.one, self.infinity
        )
    }
}

fn add_roots(p: &Poly, fiber: &mut FiberPattern) -> Result<()> {
    if p.is_constant() {
        return Ok(());
    }
    for (f, m) in p.squarefree_decomposition()? {
        fiber.add(m, f.degree().unwrap_or(0));
    }
    Ok(())
}

/// Fibers over 0, 1, ∞, including the source point `x = ∞`.
pub fn branching_pattern(m: &RatMap) -> Result<BranchPattern> {
    let mut bp = BranchPattern::default();
    add_roots(&m.num, &mut bp.zero)?;
    add_roots(&m.den, &mut bp.infinity)?;
    let diff = &m.num - &m.den;
    if diff.is_zero() {
        return Err(Error::InconsistentPattern("map is identically 1".into()));
    }
    add_roots(&diff, &mut bp.one)?;
    let d = m.degree();
    let dn = m.num.degree().unwrap_or(0);
    let dd = m.den.degree().unwrap_or(0);
    if dn > dd {
        bp.infinity.add(dn - dd, 1);
    } else if dd > dn {
        bp.zero.add(dd - dn, 1);
    } else {
        let dm = diff.degree().unwrap_or(0);
        if dm < d {
            // leading coefficients agree: x = ∞ maps to 1
            bp.one.add(d - dm, 1);
        }
    }
    for (fiber, name) in [(&bp.zero, "0"), (&bp.one, "1"), (&bp.infinity, "inf")] {
        if fiber.total() != d {
            return Err(Error::InconsistentPattern(format!(
                "fiber over {name} has total multiplicity {} != degree {d}",
                fiber.total()
            )));
        }
    }
    Ok(bp)
}

/// Genus from `2g − 2 = −2·degree + Σ (e − 1)`, assuming no other branching.
pub fn riemann_hurwitz_genus(bp: &BranchPattern, degree: usize) -> Result<usize> {
    for f in [&bp.zero, &bp.one, &bp.infinity] {
        if f.total() != degree {
            return Err(Error::InconsistentPattern(format!(
                "fiber [{f}] sums to {} but the degree is {degree}",
                f.total()
            )));
        }
    }
    let ram = bp.zero.ramification() + bp.one.ramification() + bp.infinity.ramification();
    let chi = ram as i64 - 2 * degree as i64 + 2;
    if chi < 0 || chi % 2 != 0 {
        return Err(Error::InconsistentPattern(format!(
            "2g = {chi} is not a nonnegative even number"
        )));
    }
    Ok((chi / 2) as usize)
}
