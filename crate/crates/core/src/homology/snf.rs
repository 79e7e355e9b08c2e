//! Smith normal form over the integers, exact by construction.
//!
//! The elimination runs on a sparse representation with
//! smallest-absolute-value pivoting. A fixed-width `i64` fast path is tried
//! first; any overflow falls back losslessly to arbitrary precision.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::IntegerMatrix;

/// Nonzero diagonal of the Smith form: positive invariant factors in
/// divisibility order, one per unit of rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub invariant_factors: Vec<BigInt>,
    pub rank: usize,
}

/// Diagonalizes `m` by unimodular row/column operations and returns its
/// invariant factors and rank.
pub fn smith_normal_form(m: &IntegerMatrix) -> SnfResult {
    if let Some(small) = entries_as_i64(m) {
        if let Some(factors) = snf_generic::<i64>(m.rows(), m.cols(), small) {
            let invariant_factors: Vec<BigInt> = factors.iter().map(|&f| BigInt::from(f)).collect();
            let rank = invariant_factors.len();
            return SnfResult {
                invariant_factors,
                rank,
            };
        }
    }
    let entries: Vec<(usize, usize, BigInt)> = m
        .entries()
        .map(|(r, c, v)| (r, c, v.clone()))
        .collect();
    let factors =
        snf_generic::<BigInt>(m.rows(), m.cols(), entries).expect("big integers cannot overflow");
    let rank = factors.len();
    SnfResult {
        invariant_factors: factors,
        rank,
    }
}

fn entries_as_i64(m: &IntegerMatrix) -> Option<Vec<(usize, usize, i64)>> {
    m.entries()
        .map(|(r, c, v)| i64::try_from(v).ok().map(|x| (r, c, x)))
        .collect()
}

/// Rank of `m` over GF(p) by Gaussian elimination. `p` must be prime.
pub fn rank_mod_p(m: &IntegerMatrix, p: u64) -> usize {
    let big_p = BigInt::from(p);
    let mut rows: Vec<Vec<u64>> = vec![vec![0; m.cols()]; m.rows()];
    for (r, c, v) in m.entries() {
        let residue = ((v % &big_p) + &big_p) % &big_p;
        rows[r][c] = u64::try_from(residue).expect("residue fits");
    }
    let mut rank = 0;
    for col in 0..m.cols() {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| rows[r][col] % p != 0) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let inv = mod_inverse(rows[rank][col] % p, p);
        for r in 0..rows.len() {
            if r != rank && rows[r][col] % p != 0 {
                let factor = (u128::from(rows[r][col] % p) * u128::from(inv) % u128::from(p)) as u64;
                for c in col..m.cols() {
                    let sub = u128::from(factor) * u128::from(rows[rank][c] % p) % u128::from(p);
                    let cur = u128::from(rows[r][c] % p);
                    rows[r][c] = ((cur + u128::from(p) - sub) % u128::from(p)) as u64;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p.
    let mut base = u128::from(a % p);
    let mut exp = p - 2;
    let modulus = u128::from(p);
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc as u64
}

/// Integer entry abstraction shared by the `i64` fast path and the `BigInt`
/// fallback. Every arithmetic method reports overflow with `None`.
trait Entry: Clone + Eq + std::fmt::Debug {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn abs_cmp(&self, other: &Self) -> Ordering;
    fn checked_abs(&self) -> Option<Self>;
    fn checked_sub_mul(&self, q: &Self, b: &Self) -> Option<Self>;
    fn checked_sub(&self, other: &Self) -> Option<Self>;
    fn checked_mul(&self, other: &Self) -> Option<Self>;
    fn div_trunc(&self, other: &Self) -> Option<Self>;
    /// Only called with `|other| >= 2`.
    fn divisible_by(&self, other: &Self) -> bool;
}

impl Entry for i64 {
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn abs_cmp(&self, other: &Self) -> Ordering {
        self.unsigned_abs().cmp(&other.unsigned_abs())
    }
    fn checked_abs(&self) -> Option<Self> {
        i64::checked_abs(*self)
    }
    fn checked_sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        i64::checked_sub(*self, i64::checked_mul(*q, *b)?)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        i64::checked_sub(*self, *other)
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        i64::checked_mul(*self, *other)
    }
    fn div_trunc(&self, other: &Self) -> Option<Self> {
        i64::checked_div(*self, *other)
    }
    fn divisible_by(&self, other: &Self) -> bool {
        self % other == 0
    }
}

impl Entry for BigInt {
    fn zero() -> Self {
        <BigInt as Zero>::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn abs_cmp(&self, other: &Self) -> Ordering {
        self.abs().cmp(&other.abs())
    }
    fn checked_abs(&self) -> Option<Self> {
        Some(self.abs())
    }
    fn checked_sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        Some(self - q * b)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn div_trunc(&self, other: &Self) -> Option<Self> {
        Some(self / other)
    }
    fn divisible_by(&self, other: &Self) -> bool {
        Zero::is_zero(&(self % other))
    }
}

struct Work<T> {
    rows: Vec<BTreeMap<usize, T>>,
    cols: Vec<BTreeSet<usize>>,
    row_active: Vec<bool>,
}

impl<T: Entry> Work<T> {
    fn new(nrows: usize, ncols: usize, entries: Vec<(usize, usize, T)>) -> Self {
        let mut w = Work {
            rows: vec![BTreeMap::new(); nrows],
            cols: vec![BTreeSet::new(); ncols],
            row_active: vec![true; nrows],
        };
        for (r, c, v) in entries {
            if !v.is_zero() {
                w.rows[r].insert(c, v);
                w.cols[c].insert(r);
            }
        }
        w
    }

    fn get(&self, r: usize, c: usize) -> Option<&T> {
        self.rows[r].get(&c)
    }

    fn set(&mut self, r: usize, c: usize, v: T) {
        if v.is_zero() {
            if self.rows[r].remove(&c).is_some() {
                self.cols[c].remove(&r);
            }
        } else if self.rows[r].insert(c, v).is_none() {
            self.cols[c].insert(r);
        }
    }

    /// `row_r -= q * row_p`
    fn row_sub_mul(&mut self, r: usize, p: usize, q: &T) -> Option<()> {
        let pivot_row: Vec<(usize, T)> = self.rows[p].iter().map(|(c, v)| (*c, v.clone())).collect();
        for (c, v) in pivot_row {
            let cur = self.get(r, c).cloned().unwrap_or_else(T::zero);
            self.set(r, c, cur.checked_sub_mul(q, &v)?);
        }
        Some(())
    }

    /// `col_c -= col_p`
    fn col_sub_col(&mut self, c: usize, p: usize) -> Option<()> {
        let rows_in_p: Vec<usize> = self.cols[p].iter().copied().collect();
        for r in rows_in_p {
            let sub = self.get(r, p).cloned().expect("tracked entry");
            let cur = self.get(r, c).cloned().unwrap_or_else(T::zero);
            self.set(r, c, cur.checked_sub(&sub)?);
        }
        Some(())
    }
}

/// Core elimination. Returns the invariant factors (positive, in
/// divisibility order), or `None` if fixed-width arithmetic overflowed.
fn snf_generic<T: Entry>(
    nrows: usize,
    ncols: usize,
    entries: Vec<(usize, usize, T)>,
) -> Option<Vec<T>> {
    let mut w: Work<T> = Work::new(nrows, ncols, entries);
    let mut factors = Vec::new();
    loop {
        // Smallest-absolute-value pivot; ties broken by Markowitz fill score,
        // then position, keeping the elimination deterministic.
        let mut best: Option<(usize, usize, T, usize)> = None;
        for r in 0..nrows {
            if !w.row_active[r] {
                continue;
            }
            for (&c, v) in &w.rows[r] {
                let score = (w.rows[r].len() - 1) * (w.cols[c].len() - 1);
                let better = match &best {
                    None => true,
                    Some((br, bc, bv, bscore)) => match v.abs_cmp(bv) {
                        Ordering::Less => true,
                        Ordering::Greater => false,
                        Ordering::Equal => (score, r, c) < (*bscore, *br, *bc),
                    },
                };
                if better {
                    best = Some((r, c, v.clone(), score));
                }
            }
        }
        let Some((pi, pj, pivot, _)) = best else {
            return Some(factors);
        };

        // Clear the pivot column; division remainders shrink below |pivot|
        // and force a rescan.
        let col_others: Vec<usize> = w.cols[pj].iter().copied().filter(|&r| r != pi).collect();
        if !col_others.is_empty() {
            let mut leftover = false;
            for r in col_others {
                let a = w.get(r, pj).cloned().expect("tracked entry");
                let q = a.div_trunc(&pivot)?;
                if !q.is_zero() {
                    w.row_sub_mul(r, pi, &q)?;
                }
                leftover |= w.get(r, pj).is_some();
            }
            if leftover {
                continue;
            }
        }

        // Column is clean, so clearing the pivot row only touches row `pi`.
        let row_others: Vec<(usize, T)> = w.rows[pi]
            .iter()
            .filter(|(c, _)| **c != pj)
            .map(|(c, v)| (*c, v.clone()))
            .collect();
        if !row_others.is_empty() {
            let mut leftover = false;
            for (c, a) in row_others {
                let q = a.div_trunc(&pivot)?;
                if !q.is_zero() {
                    let nv = a.checked_sub_mul(&q, &pivot)?;
                    w.set(pi, c, nv);
                }
                leftover |= w.get(pi, c).is_some();
            }
            if leftover {
                continue;
            }
        }

        // Divisibility sweep: a unit pivot divides everything; otherwise an
        // offending entry is folded next to the pivot so the next round
        // shrinks the gcd.
        if !pivot.is_unit() {
            let mut offender: Option<(usize, usize, T)> = None;
            'sweep: for r in 0..nrows {
                if !w.row_active[r] || r == pi {
                    continue;
                }
                for (&c, v) in &w.rows[r] {
                    if !v.divisible_by(&pivot) {
                        offender = Some((r, c, v.clone()));
                        break 'sweep;
                    }
                }
            }
            if let Some((r, c, a)) = offender {
                // row_r += (a / pivot) * row_pi, then col_c -= col_pj: leaves
                // the remainder a mod pivot at (r, c).
                let q = a.div_trunc(&pivot)?;
                let add = q.checked_mul(&pivot)?;
                w.set(r, pj, add);
                w.col_sub_col(c, pj)?;
                continue;
            }
        }

        factors.push(pivot.checked_abs()?);
        w.row_active[pi] = false;
        w.rows[pi].clear();
        w.cols[pj].clear();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matrix(rows: usize, cols: usize, entries: &[(usize, usize, i64)]) -> IntegerMatrix {
        let mut m = IntegerMatrix::new(rows, cols);
        for &(r, c, v) in entries {
            m.set(r, c, BigInt::from(v));
        }
        m
    }

    fn factors(m: &IntegerMatrix) -> Vec<i64> {
        smith_normal_form(m)
            .invariant_factors
            .iter()
            .map(|f| i64::try_from(f).unwrap())
            .collect()
    }

    #[test]
    fn diag_2_3_gives_1_6() {
        let m = matrix(2, 2, &[(0, 0, 2), (1, 1, 3)]);
        let res = smith_normal_form(&m);
        assert_eq!(res.rank, 2);
        assert_eq!(factors(&m), vec![1, 6]);
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        let res = smith_normal_form(&matrix(3, 4, &[]));
        assert_eq!(res.rank, 0);
        assert!(res.invariant_factors.is_empty());
    }

    #[test]
    fn triangle_boundary_has_rank_two() {
        // edges {0,1},{0,2},{1,2} with ascending-vertex orientation
        let m = matrix(
            3,
            3,
            &[
                (0, 0, -1),
                (1, 0, 1),
                (0, 1, -1),
                (2, 1, 1),
                (1, 2, -1),
                (2, 2, 1),
            ],
        );
        let res = smith_normal_form(&m);
        assert_eq!(res.rank, 2);
        assert_eq!(factors(&m), vec![1, 1]);
    }

    #[test]
    fn known_dense_example() {
        let entries = [
            (0, 0, -6),
            (0, 1, 111),
            (0, 2, -36),
            (0, 3, 6),
            (1, 0, 5),
            (1, 1, -672),
            (1, 2, 210),
            (1, 3, 74),
            (2, 1, -255),
            (2, 2, 81),
            (2, 3, 24),
            (3, 0, -7),
            (3, 1, 255),
            (3, 2, -81),
            (3, 3, -10),
        ];
        let m = matrix(4, 4, &entries);
        assert_eq!(factors(&m), vec![1, 3, 21]);
    }

    #[test]
    fn divisibility_chain_holds() {
        let m = matrix(3, 3, &[(0, 0, 4), (1, 1, 6), (2, 2, 10)]);
        let res = smith_normal_form(&m);
        for pair in res.invariant_factors.windows(2) {
            assert!(Zero::is_zero(&(&pair[1] % &pair[0])));
        }
        assert_eq!(factors(&m), vec![2, 2, 60]);
    }

    #[test]
    fn bigint_fallback_on_large_entries() {
        let mut m = IntegerMatrix::new(1, 1);
        let huge: BigInt = BigInt::from(i64::MAX) * 4 + 2;
        m.set(0, 0, huge.clone());
        let res = smith_normal_form(&m);
        assert_eq!(res.invariant_factors, vec![huge]);
    }

    #[test]
    fn rank_mod_p_agrees_on_unimodular_part() {
        let m = matrix(3, 3, &[(0, 0, 2), (1, 1, 3), (2, 0, 2), (2, 1, 3)]);
        assert_eq!(smith_normal_form(&m).rank, 2);
        assert_eq!(rank_mod_p(&m, 5), 2);
        // p = 2 kills the first generator: rank drops
        assert_eq!(rank_mod_p(&m, 2), 1);
    }
}
