//! Exact linear algebra.
//!
//! Rank and nullspace computations run fraction-free over [`BigInt`]: rational
//! rows are scaled to primitive integer rows, elimination uses cross
//! multiplication and every reduced row is divided by the gcd of its entries.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

pub type Q = Rational64;

/// Scales a rational row to a primitive integer row with the same span.
pub fn integer_row(row: &[Q]) -> Vec<BigInt> {
    let lcm = row.iter().fold(1i64, |acc, q| acc.lcm(q.denom()));
    let mut out: Vec<BigInt> = row
        .iter()
        .map(|q| BigInt::from(*q.numer()) * BigInt::from(lcm / q.denom()))
        .collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        *x /= &g;
    }
}

/// Row echelon form built incrementally.
///
/// Rows are kept primitive and sorted by pivot column; every stored row is
/// zero to the left of its pivot.
#[derive(Debug, Clone)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Pivot columns of the stored rows, increasing.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `row` against the stored rows; returns the remainder.
    pub fn reduce(&self, mut row: Vec<BigInt>) -> Vec<BigInt> {
        assert_eq!(row.len(), self.ncols, "row length mismatch");
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if row[p].is_zero() {
                continue;
            }
            let a = r[p].clone();
            let b = row[p].clone();
            let g = a.gcd(&b);
            let (a, b) = (&a / &g, &b / &g);
            for (x, y) in row.iter_mut().zip(r) {
                *x = &*x * &a - y * &b;
            }
            make_primitive(&mut row);
        }
        row
    }

    /// Inserts a row; returns true when the rank grew.
    pub fn insert(&mut self, row: Vec<BigInt>) -> bool {
        let row = self.reduce(row);
        let Some(p) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, row);
        true
    }

    pub fn insert_rational(&mut self, row: &[Q]) -> bool {
        self.insert(integer_row(row))
    }

    pub fn contains(&self, row: Vec<BigInt>) -> bool {
        self.reduce(row).iter().all(Zero::is_zero)
    }

    /// Basis of the right nullspace `{x : A x = 0}` as primitive integer vectors.
    pub fn nullspace(&self) -> Vec<Vec<BigInt>> {
        // Bring the stored rows to reduced form, scaled so each pivot is positive.
        let mut rref = self.rows.clone();
        for i in (0..rref.len()).rev() {
            let p = self.pivots[i];
            if rref[i][p].is_negative() {
                for x in rref[i].iter_mut() {
                    *x = -&*x;
                }
            }
            for k in 0..i {
                if rref[k][p].is_zero() {
                    continue;
                }
                let a = rref[i][p].clone();
                let b = rref[k][p].clone();
                let g = a.gcd(&b);
                let (a, b) = (&a / &g, &b / &g);
                let (head, tail) = rref.split_at_mut(i);
                for (x, y) in head[k].iter_mut().zip(&tail[0]) {
                    *x = &*x * &a - y * &b;
                }
                make_primitive(&mut head[k]);
                if head[k][self.pivots[k]].is_negative() {
                    for x in head[k].iter_mut() {
                        *x = -&*x;
                    }
                }
            }
        }
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.ncols];
            for &p in &self.pivots {
                v[p] = true;
            }
            v
        };
        let lcm_pivots = rref
            .iter()
            .zip(&self.pivots)
            .fold(BigInt::one(), |acc, (r, &p)| acc.lcm(&r[p]));
        let mut basis = Vec::new();
        for free in (0..self.ncols).filter(|&c| !is_pivot[c]) {
            let mut x = vec![BigInt::zero(); self.ncols];
            x[free] = lcm_pivots.clone();
            for (r, &p) in rref.iter().zip(&self.pivots) {
                if !r[free].is_zero() {
                    x[p] = -(&r[free] * (&lcm_pivots / &r[p]));
                }
            }
            make_primitive(&mut x);
            basis.push(x);
        }
        basis
    }
}

/// Rank of a set of rational vectors of length `ncols`.
pub fn rank<'a>(rows: impl IntoIterator<Item = &'a [Q]>, ncols: usize) -> usize {
    rank_capped(rows, ncols, usize::MAX)
}

/// Rank, stopping as soon as `cap` independent rows are found.
pub fn rank_capped<'a>(rows: impl IntoIterator<Item = &'a [Q]>, ncols: usize, cap: usize) -> usize {
    let mut ech = Echelon::new(ncols);
    for row in rows {
        if ech.rank() >= cap {
            break;
        }
        ech.insert_rational(row);
    }
    ech.rank()
}

/// Indices of a maximal independent subset, in input order.
pub fn independent_subset<'a>(rows: impl IntoIterator<Item = &'a [Q]>, ncols: usize) -> Vec<usize> {
    let mut ech = Echelon::new(ncols);
    let mut picked = Vec::new();
    for (i, row) in rows.into_iter().enumerate() {
        if ech.insert_rational(row) {
            picked.push(i);
            if ech.rank() == ncols {
                break;
            }
        }
    }
    picked
}

/// Nullspace of a rational matrix given by rows.
pub fn nullspace(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<BigInt>> {
    let mut ech = Echelon::new(ncols);
    for row in rows {
        ech.insert_rational(row);
    }
    ech.nullspace()
}

/// Converts a primitive integer vector back to small rationals, if it fits.
pub fn to_q(v: &[BigInt]) -> Option<Vec<Q>> {
    v.iter().map(|x| i64::try_from(x).ok().map(Q::from_integer)).collect()
}

/// Gauss-Jordan inverse of a small square rational matrix.
pub fn inverse(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}
