//! Exact Gaussian elimination over number-field towers and the two series
//! consumers built on it.

use crate::error::{Error, Result};
use crate::exactfield::{FieldElement, FieldTower, Rational};
use crate::series::RadicalSeries;
use num_traits::{Signed, Zero};

/// Row echelon form in place; returns the pivot columns.
fn echelon(m: &mut [Vec<FieldElement>], cols: usize) -> Result<Vec<usize>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv()?;
        for j in c..m[r].len() {
            m[r][j] = &m[r][j] * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..m[i].len() {
                    let d = &f * &m[r][j];
                    m[i][j] -= &d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Ok(pivots)
}

/// Rank of a matrix given by rows.
pub fn rank(rows: &[Vec<FieldElement>]) -> Result<usize> {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut m = rows.to_vec();
    Ok(echelon(&mut m, cols)?.len())
}

/// Solves `A c = b` for a square-or-tall system with full column rank.
///
/// `Ok(None)` when the system is inconsistent.
pub fn solve(a: &[Vec<FieldElement>], b: &[FieldElement]) -> Result<Option<Vec<FieldElement>>> {
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<FieldElement>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = echelon(&mut m, cols + 1)?;
    if pivots.last() == Some(&cols) {
        return Ok(None);
    }
    if pivots.len() < cols {
        return Err(Error::RankDeficient {
            rank: pivots.len(),
            needed: cols,
        });
    }
    Ok(Some((0..cols).map(|i| m[i][cols].clone()).collect()))
}

/// First exponent counted and the common tower: `x⁰` for ordinary power
/// series, otherwise the lowest offset.
fn common_frame(family: &[&RadicalSeries]) -> Result<(Rational, FieldTower)> {
    let lowest = family
        .iter()
        .map(|s| s.offset().clone())
        .min()
        .ok_or_else(|| Error::InvalidConfig("empty series family".into()))?;
    let ordinary = family.iter().all(|s| s.offset().is_integer() && !s.offset().is_negative());
    let base = if ordinary { Rational::zero() } else { lowest };
    let mut field = FieldTower::rationals();
    for s in family {
        field = field.common(s.field()).ok_or_else(|| Error::TowerMismatch {
            left: field.to_string(),
            right: s.field().to_string(),
        })?;
    }
    Ok((base, field))
}

fn available(family: &[&RadicalSeries], base: &Rational) -> usize {
    family
        .iter()
        .map(|s| crate::exactfield::to_i64(&(s.precision() - base)).unwrap_or(0).max(0) as usize)
        .min()
        .unwrap_or(0)
}

fn rows_of(family: &[&RadicalSeries], base: &Rational, field: &FieldTower, n: usize) -> Result<Vec<Vec<FieldElement>>> {
    family
        .iter()
        .map(|s| s.lift(field)?.coefficients_from(base, n))
        .collect()
}

/// Constants `c` with `target = Σ cⱼ basisⱼ`, fitted on the first `k`
/// coefficients and confirmed on every remaining coefficient of the common
/// precision. `Ok(None)` if no such constants exist.
pub fn solve_connection_constants(
    target: &RadicalSeries,
    basis: &[RadicalSeries],
    k: usize,
) -> Result<Option<Vec<FieldElement>>> {
    let mut family: Vec<&RadicalSeries> = basis.iter().collect();
    family.push(target);
    let (base, field) = common_frame(&family)?;
    let n = available(&family, &base);
    if basis.len() > k || k > n {
        return Err(Error::InvalidConfig(format!(
            "need basis size {} <= k = {k} <= common precision {n}",
            basis.len()
        )));
    }
    let rows = rows_of(&family, &base, &field, n)?;
    let (t, cols) = rows.split_last().expect("target present");
    let a: Vec<Vec<FieldElement>> = (0..k).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    let Some(c) = solve(&a, &t[..k])? else {
        return Ok(None);
    };
    for i in k..n {
        let mut acc = field.zero();
        for (cj, col) in c.iter().zip(cols) {
            acc += &(cj * &col[i]);
        }
        if acc != t[i] {
            return Ok(None);
        }
    }
    Ok(Some(c))
}

/// Rank of the coefficient matrix of the family, each member divided by its
/// own leading scale, over `order` coefficients.
pub fn rank_check(family: &[RadicalSeries], order: usize) -> Result<usize> {
    let normalized: Vec<RadicalSeries> = family.iter().map(RadicalSeries::normalized).collect();
    let refs: Vec<&RadicalSeries> = normalized.iter().collect();
    let (base, field) = common_frame(&refs)?;
    let n = available(&refs, &base);
    if n < order {
        return Err(Error::InvalidConfig(format!(
            "family known to {n} coefficients, {order} requested"
        )));
    }
    rank(&rows_of(&refs, &base, &field, order)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{int, rat};
    use crate::series::TruncSeries;
    use proptest::prelude::*;

    fn q() -> FieldTower {
        FieldTower::rationals()
    }

    fn ser(c: &[i64], n: usize) -> RadicalSeries {
        let mut v: Vec<Rational> = c.iter().map(|&x| int(x)).collect();
        v.resize(n, int(0));
        RadicalSeries::from_series(&TruncSeries::from_rationals(&q(), &v))
    }

    #[test]
    fn small_ranks() {
        let fam = [ser(&[1], 8), ser(&[0, 1], 8), ser(&[0, 0, 1], 8), ser(&[1, 1], 8)];
        assert_eq!(rank_check(&fam, 8).unwrap(), 3);
        let f = ser(&[1, 2, 3, 4], 8);
        let g = RadicalSeries::from_series(&f.to_trunc().unwrap().scale_rational(&int(2)));
        assert_eq!(rank_check(&[f, g], 8).unwrap(), 1);
    }

    #[test]
    fn x_squared_is_not_in_span_of_one_and_x() {
        let t = ser(&[0, 0, 1], 6);
        let b = [ser(&[1], 6), ser(&[0, 1], 6)];
        assert!(solve_connection_constants(&t, &b, 2).unwrap().is_none());
        let t = ser(&[3, -2], 6);
        let c = solve_connection_constants(&t, &b, 2).unwrap().unwrap();
        assert_eq!(c, vec![q().from_int(3), q().from_int(-2)]);
    }

    #[test]
    fn dependent_basis_is_rank_deficient() {
        let b = [ser(&[1, 1], 6), ser(&[2, 2], 6)];
        assert!(matches!(
            solve_connection_constants(&ser(&[1, 1], 6), &b, 2),
            Err(Error::RankDeficient { rank: 1, needed: 2 })
        ));
    }

    #[test]
    fn fractional_offsets_must_align() {
        let a = ser(&[1], 6);
        let b = a.shift(&rat(1, 2));
        assert!(rank_check(&[a, b], 4).is_err());
    }

    fn vecs() -> impl Strategy<Value = Vec<Vec<i64>>> {
        prop::collection::vec(prop::collection::vec(-3i64..4, 6), 1..5)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn rank_invariant_under_scaling_and_reordering(rows in vecs(), scales in prop::collection::vec(1i64..5, 5), rot in 0usize..5) {
            let fam: Vec<RadicalSeries> = rows.iter().map(|r| ser(r, 6)).collect();
            let r0 = rank_check(&fam, 6).unwrap();
            let mut scaled: Vec<RadicalSeries> = fam
                .iter()
                .zip(&scales)
                .map(|(f, &s)| f.mul_scalar(&q().from_int(s)))
                .collect();
            let len = scaled.len();
            scaled.rotate_left(rot % len);
            prop_assert_eq!(rank_check(&scaled, 6).unwrap(), r0);
        }

        #[test]
        fn constants_follow_target_scaling_and_basis_order(c in prop::collection::vec(-4i64..5, 3), s in 1i64..6) {
            let b = vec![ser(&[1, 1, 0, 2], 10), ser(&[0, 1, -1], 10), ser(&[2, 0, 0, 0, 1], 10)];
            let mut t = RadicalSeries::zero(&q(), int(0), 10);
            for (ci, bi) in c.iter().zip(&b) {
                t = t.add(&bi.mul_scalar(&q().from_int(*ci))).unwrap();
            }
            let got = solve_connection_constants(&t, &b, 3).unwrap().unwrap();
            let want: Vec<FieldElement> = c.iter().map(|&x| q().from_int(x)).collect();
            prop_assert_eq!(&got, &want);
            let ts = t.mul_scalar(&q().from_int(s));
            let scaled = solve_connection_constants(&ts, &b, 3).unwrap().unwrap();
            let expect: Vec<FieldElement> = want.iter().map(|x| x.scale(&int(s))).collect();
            prop_assert_eq!(scaled, expect);
            let rev: Vec<RadicalSeries> = b.iter().rev().cloned().collect();
            let mut back = solve_connection_constants(&t, &rev, 3).unwrap().unwrap();
            back.reverse();
            prop_assert_eq!(back, want);
        }
    }
}
