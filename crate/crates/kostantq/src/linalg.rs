//! Exact linear algebra for the chamber engine: fraction-free integer
//! determinants and rational row reduction with pluggable right-hand
//! sides (plain rationals for cone membership, polynomials in `q` for
//! chamber fits).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::poly::QPoly;

/// Determinant of a square integer matrix by Bareiss elimination.
/// Every intermediate division is exact, so no rationals appear.
pub(crate) fn det_bigint(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = rows.to_vec();
    let mut negated = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negated = !negated;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negated {
        -det
    } else {
        det
    }
}

/// What a right-hand-side entry must support to ride along with
/// rational row reduction.
pub(crate) trait Rhs: Clone {
    fn zero_value() -> Self;
    fn is_zero_value(&self) -> bool;
    fn scale_assign(&mut self, c: &BigRational);
    fn sub_scaled(&mut self, other: &Self, c: &BigRational);
}

impl Rhs for BigRational {
    fn zero_value() -> Self {
        BigRational::zero()
    }

    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }

    fn scale_assign(&mut self, c: &BigRational) {
        *self *= c.clone();
    }

    fn sub_scaled(&mut self, other: &Self, c: &BigRational) {
        *self -= other.clone() * c.clone();
    }
}

impl Rhs for QPoly<BigRational> {
    fn zero_value() -> Self {
        QPoly::new()
    }

    fn is_zero_value(&self) -> bool {
        Zero::is_zero(self)
    }

    fn scale_assign(&mut self, c: &BigRational) {
        *self = self.scale(c);
    }

    fn sub_scaled(&mut self, other: &Self, c: &BigRational) {
        *self -= &other.scale(c);
    }
}

/// Row-reduces `a x = b` over the rationals.  Returns the particular
/// solution with every free variable set to zero, or `None` when the
/// system is inconsistent.
pub(crate) fn solve_exact<R: Rhs>(
    mut a: Vec<Vec<BigRational>>,
    mut b: Vec<R>,
) -> Option<Vec<R>> {
    let rows = a.len();
    debug_assert_eq!(rows, b.len());
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut next = 0;
    for col in 0..cols {
        let Some(p) = (next..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(next, p);
        b.swap(next, p);
        let inv = a[next][col].clone().recip();
        for j in col..cols {
            let v = &a[next][j] * &inv;
            a[next][j] = v;
        }
        b[next].scale_assign(&inv);
        for r in 0..rows {
            if r == next || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in col..cols {
                let v = &a[r][j] - &f * &a[next][j];
                a[r][j] = v;
            }
            let pivot_rhs = b[next].clone();
            b[r].sub_scaled(&pivot_rhs, &f);
        }
        pivots.push((next, col));
        next += 1;
        if next == rows {
            break;
        }
    }
    if b[next..].iter().any(|v| !v.is_zero_value()) {
        return None;
    }
    let mut x = vec![R::zero_value(); cols];
    for (row, col) in pivots {
        x[col] = b[row].clone();
    }
    Some(x)
}

/// Rank of a rational matrix, by plain elimination.
pub(crate) fn rank_rational(mut a: Vec<Vec<BigRational>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut next = 0;
    for col in 0..cols {
        let Some(p) = (next..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(next, p);
        for r in next + 1..rows {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &a[next][col];
            for j in col..cols {
                let v = &a[r][j] - &f * &a[next][j];
                a[r][j] = v;
            }
        }
        next += 1;
        if next == rows {
            break;
        }
    }
    next
}
