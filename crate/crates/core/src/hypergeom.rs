//! Generalized hypergeometric series, the third-order hypergeometric
//! operator, local exponents and contiguity operators.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactfield::{fmt_rational, int, is_nonpositive_integer, FieldTower, Rational};
use crate::series::{RadicalSeries, TruncSeries};

/// Upper parameters `α₁..α_p` and lower parameters `β₁..β_{p−1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct HpgParams {
    upper: Vec<Rational>,
    lower: Vec<Rational>,
}

/// Local exponents at `z = 0, 1, ∞` of the third-order equation.
#[derive(Clone, Debug, PartialEq)]
pub struct PSymbol {
    pub at_zero: [Rational; 3],
    pub at_one: [Rational; 3],
    pub at_infinity: [Rational; 3],
    pub gamma: Rational,
}

impl PSymbol {
    pub fn exponent_sum(&self) -> Rational {
        self.at_zero
            .iter()
            .chain(&self.at_one)
            .chain(&self.at_infinity)
            .fold(Rational::zero(), |acc, e| acc + e)
    }
}

/// The 3×3 matrix whose columns feed the local bases at 0 and rows those at ∞.
#[derive(Clone, Debug, PartialEq)]
pub struct CompanionMatrix(pub [[Rational; 3]; 3]);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SingularPoint {
    Zero,
    Infinity,
}

/// One local solution `z^offset · ₃F₂(params; z)` (at ∞ the series variable is `1/z`).
#[derive(Clone, Debug, PartialEq)]
pub struct LocalSolution {
    pub offset: Rational,
    pub params: HpgParams,
}

/// Gauge operators relating contiguous functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Contiguity {
    /// `d/dz`
    Derivative,
    /// `1 + (z/αᵢ) d/dz`, raising `αᵢ` by one (index from 0)
    RaiseUpper(usize),
    /// `1 + (z/(βⱼ − 1)) d/dz`, lowering `βⱼ` by one (index from 0)
    LowerLower(usize),
}

impl HpgParams {
    /// Rejects non-positive integer lower parameters.
    pub fn new(upper: Vec<Rational>, lower: Vec<Rational>) -> Result<Self> {
        if let Some(b) = lower.iter().find(|b| is_nonpositive_integer(b)) {
            return Err(Error::ForbiddenLowerParameter(b.clone()));
        }
        Ok(HpgParams { upper, lower })
    }

    /// `(α₁,α₂,α₃; β₁,β₂)` from `(numerator, denominator)` pairs.
    pub fn from_pairs(upper: &[(i64, i64)], lower: &[(i64, i64)]) -> Result<Self> {
        let conv = |v: &[(i64, i64)]| {
            v.iter()
                .map(|&(n, d)| Rational::new(n.into(), d.into()))
                .collect::<Vec<_>>()
        };
        Self::new(conv(upper), conv(lower))
    }

    pub fn upper(&self) -> &[Rational] {
        &self.upper
    }

    pub fn lower(&self) -> &[Rational] {
        &self.lower
    }

    fn require_3f2(&self) -> Result<()> {
        if self.upper.len() != 3 || self.lower.len() != 2 {
            return Err(Error::Arity {
                expected_upper: 3,
                expected_lower: 2,
                upper: self.upper.len(),
                lower: self.lower.len(),
            });
        }
        Ok(())
    }

    /// All parameters shifted by `k`.
    pub fn shifted_all(&self, k: i64) -> Result<Self> {
        let k = int(k);
        Self::new(
            self.upper.iter().map(|a| a + &k).collect(),
            self.lower.iter().map(|b| b + &k).collect(),
        )
    }

    /// The parameters reached by a contiguity operator.
    pub fn contiguous(&self, which: Contiguity) -> Result<Self> {
        let mut p = self.clone();
        match which {
            Contiguity::Derivative => return self.shifted_all(1),
            Contiguity::RaiseUpper(i) => p.upper[i] += Rational::one(),
            Contiguity::LowerLower(j) => p.lower[j] -= Rational::one(),
        }
        Self::new(p.upper, p.lower)
    }

    /// `∏αᵢ / ∏βⱼ`, the first series coefficient.
    pub fn first_coefficient(&self) -> Rational {
        let num = self.upper.iter().fold(Rational::one(), |a, x| a * x);
        let den = self.lower.iter().fold(Rational::one(), |a, x| a * x);
        num / den
    }
}

impl std::fmt::Display for HpgParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let j = |v: &[Rational]| v.iter().map(fmt_rational).collect::<Vec<_>>().join(", ");
        write!(f, "({}; {})", j(&self.upper), j(&self.lower))
    }
}

/// Series of `pF_{p−1}(α; β; z)` over Q to order `n`.
pub fn hpg_series(p: &HpgParams, n: usize) -> Result<TruncSeries> {
    let p = HpgParams::new(p.upper.clone(), p.lower.clone())?;
    let mut c = Vec::with_capacity(n);
    let mut cur = Rational::one();
    for k in 0..n {
        c.push(cur.clone());
        let kk = int(k as i64);
        let num = p.upper.iter().fold(Rational::one(), |a, x| a * (x + &kk));
        let den = p
            .lower
            .iter()
            .fold(int(k as i64 + 1), |a, x| a * (x + &kk));
        cur = cur * num / den;
    }
    Ok(TruncSeries::from_rationals(&FieldTower::rationals(), &c))
}

pub fn psymbol(p: &HpgParams) -> Result<PSymbol> {
    p.require_3f2()?;
    let (a, b) = (&p.upper, &p.lower);
    let gamma = &a[0] + &a[1] + &a[2] - &b[0] - &b[1];
    Ok(PSymbol {
        at_zero: [Rational::zero(), int(1) - &b[0], int(1) - &b[1]],
        at_one: [Rational::zero(), Rational::one(), gamma.clone()],
        at_infinity: [a[0].clone(), a[1].clone(), a[2].clone()],
        gamma,
    })
}

pub fn companion_matrix(p: &HpgParams) -> Result<CompanionMatrix> {
    p.require_3f2()?;
    let one = Rational::one();
    let row = |a: &Rational| {
        [
            a.clone(),
            a - &p.lower[1] + &one,
            a - &p.lower[0] + &one,
        ]
    };
    Ok(CompanionMatrix([
        row(&p.upper[0]),
        row(&p.upper[1]),
        row(&p.upper[2]),
    ]))
}

fn check_difference(point: &str, a: &Rational, b: &Rational) -> Result<()> {
    let d = a - b;
    if d.is_integer() {
        return Err(Error::DegenerateBasis {
            point: point.to_string(),
            difference: d,
        });
    }
    Ok(())
}

/// The generic basis of local solutions at 0 or ∞.
pub fn companion_basis(p: &HpgParams, at: SingularPoint) -> Result<Vec<LocalSolution>> {
    let m = companion_matrix(p)?.0;
    let one = Rational::one();
    let two = int(2);
    let (b1, b2) = (&p.lower[0], &p.lower[1]);
    match at {
        SingularPoint::Zero => {
            check_difference("z=0", &one, b1)?;
            check_difference("z=0", &one, b2)?;
            check_difference("z=0", b1, b2)?;
            let col = |j: usize| vec![m[0][j].clone(), m[1][j].clone(), m[2][j].clone()];
            Ok(vec![
                LocalSolution {
                    offset: Rational::zero(),
                    params: HpgParams::new(col(0), vec![b1.clone(), b2.clone()])?,
                },
                LocalSolution {
                    offset: &one - b2,
                    params: HpgParams::new(col(1), vec![&two - b2, b1 - b2 + &one])?,
                },
                LocalSolution {
                    offset: &one - b1,
                    params: HpgParams::new(col(2), vec![&two - b1, b2 - b1 + &one])?,
                },
            ])
        }
        SingularPoint::Infinity => {
            let a = &p.upper;
            for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                check_difference("z=infinity", &a[i], &a[j])?;
            }
            (0..3)
                .map(|j| {
                    let others: Vec<Rational> = (0..3)
                        .filter(|&k| k != j)
                        .map(|k| &a[j] - &a[k] + &one)
                        .collect();
                    Ok(LocalSolution {
                        offset: -&a[j],
                        params: HpgParams::new(m[j].to_vec(), others)?,
                    })
                })
                .collect()
        }
    }
}

fn prod_shift(params: &[Rational], s: &Rational) -> Rational {
    params.iter().fold(Rational::one(), |a, x| a * (x + s))
}

/// Residual of the hypergeometric operator on `f = scale·z^μ·Σ cₖ zᵏ`.
///
/// `θ = z d/dz` acts as `μ + k` on the `k`-th term; the residual has offset
/// `μ − 1` and vanishes to its order exactly when `f` is a local solution.
pub fn apply_hpg_operator(p: &HpgParams, f: &RadicalSeries) -> Result<RadicalSeries> {
    p.require_3f2()?;
    let mu = f.offset().clone();
    let field = f.field().clone();
    let n = f.order();
    let c = f.unit().coeffs();
    let lower_m1: Vec<Rational> = p.lower.iter().map(|b| b - int(1)).collect();
    let a_of = |k: i64| prod_shift(&p.upper, &(&mu + int(k)));
    let b_of = |k: i64| {
        let e = &mu + int(k);
        prod_shift(&lower_m1, &e) * e
    };
    let res: Vec<_> = (0..n)
        .map(|j| {
            let mut r = c[j].scale(&(-b_of(j as i64)));
            if j > 0 {
                r += &c[j - 1].scale(&a_of(j as i64 - 1));
            }
            r
        })
        .collect();
    let s = TruncSeries::new(&field, res);
    Ok(shifted_scaled(&s, &(mu - int(1)), f))
}

/// Same operator written in `w = 1/z`, for `f = scale·w^μ·Σ cₖ wᵏ`.
///
/// The residual, up to the overall factor `z`, has offset `μ` in `w`.
pub fn apply_hpg_operator_at_infinity(p: &HpgParams, f: &RadicalSeries) -> Result<RadicalSeries> {
    p.require_3f2()?;
    let mu = f.offset().clone();
    let field = f.field().clone();
    let n = f.order();
    let c = f.unit().coeffs();
    let res: Vec<_> = (0..n)
        .map(|j| {
            let e = &mu + int(j as i64);
            let ne = -&e;
            let mut r = c[j].scale(&prod_shift(&p.upper, &ne));
            if j > 0 {
                let w = (&e - int(1)) * prod_shift(&p.lower, &ne);
                r += &c[j - 1].scale(&w);
            }
            r
        })
        .collect();
    let s = TruncSeries::new(&field, res);
    Ok(shifted_scaled(&s, &mu, f))
}

fn shifted_scaled(s: &TruncSeries, offset: &Rational, f: &RadicalSeries) -> RadicalSeries {
    let r = RadicalSeries::from_series(s);
    if r.is_zero() {
        RadicalSeries::zero(s.field(), offset.clone(), s.order())
    } else {
        r.shift(offset).mul_scalar(f.scale())
    }
}

/// A local solution as a radical series (in `z` at 0, in `w = 1/z` at ∞).
pub fn local_solution_series(sol: &LocalSolution, at: SingularPoint, n: usize) -> Result<RadicalSeries> {
    let s = hpg_series(&sol.params, n)?;
    let offset = match at {
        SingularPoint::Zero => sol.offset.clone(),
        SingularPoint::Infinity => -&sol.offset,
    };
    Ok(RadicalSeries::new(offset, s.field().one(), s)?)
}

/// Applies a contiguity operator to a series.
pub fn contiguity_apply(p: &HpgParams, which: Contiguity, f: &TruncSeries) -> Result<TruncSeries> {
    let d = f.derivative();
    let gauge = |c: &Rational, what: String| -> Result<TruncSeries> {
        if c.is_zero() {
            return Err(Error::ContiguityPole(what));
        }
        let zd = d.mul_x_pow(1).scale_rational(&c.recip());
        Ok(f + &zd)
    };
    match which {
        Contiguity::Derivative => Ok(d),
        Contiguity::RaiseUpper(i) => {
            let a = p.upper.get(i).ok_or_else(|| Error::InvalidConfig(format!("no upper parameter {i}")))?;
            gauge(a, format!("upper parameter {} is zero", i + 1))
        }
        Contiguity::LowerLower(j) => {
            let b = p.lower.get(j).ok_or_else(|| Error::InvalidConfig(format!("no lower parameter {j}")))?;
            gauge(&(b - int(1)), format!("lower parameter {} equals 1", j + 1))
        }
    }
}
