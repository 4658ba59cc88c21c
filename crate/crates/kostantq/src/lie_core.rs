//! Type-A root-system data, weight coordinates, and the Weyl group.
//!
//! Everything is phrased in the coordinate model of `gl_k` with
//! `k = n + 1`:
//!
//! * a [`Weight`] is an integer vector in the standard basis
//!   `e_1, ..., e_k`;
//! * the positive roots are the differences `e_i - e_j` for `i < j`,
//!   listed lexicographically by `(i, j)`;
//! * the Weyl group is the symmetric group permuting the `k`
//!   coordinates, with length = inversion count and sign = parity.
//!
//! `rho` is represented by the staircase vector `(n, n-1, ..., 1, 0)`
//! rather than the traceless half-sum of positive roots.  The two
//! differ by a multiple of `(1, ..., 1)`, and every alternating-sum
//! formula in this crate consumes only differences of equal-trace
//! weights, so the choice of representative is immaterial; the
//! staircase keeps all coordinates nonnegative, which is what the
//! partition-indexed character routines expect.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weight of `gl_k`, stored as its `k` integer coordinates in the
/// standard basis `e_1, ..., e_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight { coords }
    }

    /// The zero weight with `k` coordinates.
    pub fn zero(k: usize) -> Self {
        Weight { coords: vec![0; k] }
    }

    /// Number of coordinates (the `k` of `gl_k`).
    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Sum of the coordinates.  Root-lattice elements have trace 0.
    pub fn trace(&self) -> i64 {
        self.coords.iter().sum()
    }

    /// Weakly decreasing coordinates.
    pub fn is_dominant(&self) -> bool {
        self.coords.windows(2).all(|w| w[0] >= w[1])
    }

    /// Strictly decreasing coordinates; equivalently, subtracting the
    /// staircase `(k-1, ..., 1, 0)` leaves a dominant weight.
    pub fn is_strictly_dominant(&self) -> bool {
        self.coords.windows(2).all(|w| w[0] > w[1])
    }

    /// True when every coordinate is `>= 0`.
    pub fn is_nonnegative(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }
}

impl fmt::Display for Weight {
    /// Comma-separated coordinates, e.g. `3,1,0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for c in &self.coords {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coords = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::ParseWeight(s.to_string()))
            })
            .collect::<Result<Vec<i64>>>()?;
        if coords.is_empty() {
            return Err(Error::ParseWeight(s.to_string()));
        }
        Ok(Weight { coords })
    }
}

/// Coordinate-wise sum.  Panics if the operands have different lengths.
impl Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.dim(), rhs.dim(), "weight dimensions differ");
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// Coordinate-wise difference.  Panics if the operands have different
/// lengths.
impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.dim(), rhs.dim(), "weight dimensions differ");
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }
}

/// The root datum of type `A_n` realised inside `gl_{n+1}`.
///
/// Holds the positive roots in their canonical order (lexicographic by
/// the index pair `(i, j)` of `e_i - e_j`), the simple roots
/// `alpha_i = e_i - e_{i+1}`, and the staircase representative of
/// `rho`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystemA {
    n: usize,
    positive_roots: Vec<Weight>,
    root_pairs: Vec<(usize, usize)>,
    simple_roots: Vec<Weight>,
    rho: Weight,
}

impl RootSystemA {
    /// Builds the `A_n` root datum.  Rejects `n = 0`.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRank);
        }
        let k = n + 1;
        let mut positive_roots = Vec::with_capacity(n * k / 2);
        let mut root_pairs = Vec::with_capacity(n * k / 2);
        for i in 0..k {
            for j in (i + 1)..k {
                let mut coords = vec![0i64; k];
                coords[i] = 1;
                coords[j] = -1;
                positive_roots.push(Weight { coords });
                root_pairs.push((i, j));
            }
        }
        let simple_roots = (0..n)
            .map(|i| {
                let mut coords = vec![0i64; k];
                coords[i] = 1;
                coords[i + 1] = -1;
                Weight { coords }
            })
            .collect();
        let rho = Weight {
            coords: (0..k).rev().map(|c| c as i64).collect(),
        };
        Ok(RootSystemA {
            n,
            positive_roots,
            root_pairs,
            simple_roots,
            rho,
        })
    }

    /// The rank `n`.
    pub fn rank(&self) -> usize {
        self.n
    }

    /// The number of `gl` coordinates, `k = n + 1`.
    pub fn dim(&self) -> usize {
        self.n + 1
    }

    /// `N = n(n+1)/2`.
    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// The positive roots `e_i - e_j` (`i < j`), ordered
    /// lexicographically by `(i, j)`.
    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    /// The index pair `(i, j)` of each positive root, aligned with
    /// [`Self::positive_roots`].
    pub fn root_pairs(&self) -> &[(usize, usize)] {
        &self.root_pairs
    }

    /// The simple roots `alpha_1, ..., alpha_n`.
    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    /// The staircase weight `(n, n-1, ..., 1, 0)`.
    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// Coordinate-wise sum of all positive roots, `(n, n-2, ..., -n)`.
    pub fn sum_of_positive_roots(&self) -> Weight {
        let mut total = Weight::zero(self.dim());
        for alpha in &self.positive_roots {
            total = &total + alpha;
        }
        total
    }

    /// The inclusive range `lo..=hi` of simple-root indices appearing
    /// in the expansion of positive root `idx`: `e_i - e_j` is
    /// `alpha_{i+1} + ... + alpha_j` (1-based), i.e. simple indices
    /// `i..=j-1` in 0-based terms.
    pub fn root_simple_span(&self, idx: usize) -> (usize, usize) {
        let (i, j) = self.root_pairs[idx];
        (i, j - 1)
    }

    /// Positive root `idx` written in simple-root coordinates: a
    /// 0/1 vector with a single run of ones.
    pub fn root_in_simple_coords(&self, idx: usize) -> Vec<i64> {
        let (lo, hi) = self.root_simple_span(idx);
        let mut a = vec![0i64; self.n];
        for entry in &mut a[lo..=hi] {
            *entry = 1;
        }
        a
    }

    /// Simple-root coordinates `a_i` of a trace-0 weight: partial sums
    /// `a_i = v_1 + ... + v_i` for `i = 1..n`.  Fails when the trace is
    /// nonzero (the weight is then outside the root lattice's span) or
    /// the dimension does not match.
    pub fn to_root_coords(&self, v: &Weight) -> Result<Vec<i64>> {
        if v.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.dim(),
            });
        }
        if v.trace() != 0 {
            return Err(Error::NonzeroTrace(v.to_string()));
        }
        let mut acc = 0i64;
        let mut a = Vec::with_capacity(self.n);
        for &c in &v.coords[..self.n] {
            acc += c;
            a.push(acc);
        }
        Ok(a)
    }

    /// Inverse of [`Self::to_root_coords`]: expands `sum a_i alpha_i`
    /// back into `e`-coordinates.
    pub fn from_root_coords(&self, a: &[i64]) -> Result<Weight> {
        if a.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: a.len(),
            });
        }
        let mut coords = Vec::with_capacity(self.dim());
        let mut prev = 0i64;
        for &ai in a {
            coords.push(ai - prev);
            prev = ai;
        }
        coords.push(-prev);
        Ok(Weight { coords })
    }

    /// All `(n+1)!` Weyl elements in lexicographic permutation order,
    /// starting from the identity.
    pub fn weyl_group(&self) -> Vec<WeylElement> {
        WeylElement::all(self.dim())
    }
}

/// An element of the Weyl group of `A_n`: a permutation of the `k`
/// coordinate positions `0..k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    perm: Vec<usize>,
}

impl WeylElement {
    /// Wraps a permutation of `0..k`, rejecting anything that is not
    /// one.
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let k = perm.len();
        let mut seen = vec![false; k];
        for &p in &perm {
            if p >= k || seen[p] {
                return Err(Error::NotAPermutation(perm.clone(), k));
            }
            seen[p] = true;
        }
        Ok(WeylElement { perm })
    }

    pub fn identity(k: usize) -> Self {
        WeylElement {
            perm: (0..k).collect(),
        }
    }

    /// The transposition exchanging positions `a` and `b`.
    pub fn transposition(k: usize, a: usize, b: usize) -> Result<Self> {
        if a >= k || b >= k {
            return Err(Error::NotAPermutation(vec![a, b], k));
        }
        let mut perm: Vec<usize> = (0..k).collect();
        perm.swap(a, b);
        Ok(WeylElement { perm })
    }

    /// All `k!` elements in lexicographic order over the underlying
    /// permutation vectors, beginning with the identity.
    pub fn all(k: usize) -> Vec<WeylElement> {
        let mut out = Vec::new();
        let mut perm: Vec<usize> = (0..k).collect();
        loop {
            out.push(WeylElement { perm: perm.clone() });
            if !next_permutation(&mut perm) {
                break;
            }
        }
        out
    }

    /// Number of positions permuted.
    pub fn degree(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// Coxeter length: the number of inversions of the permutation.
    pub fn length(&self) -> usize {
        let mut inv = 0;
        for i in 0..self.perm.len() {
            for j in (i + 1)..self.perm.len() {
                if self.perm[i] > self.perm[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// `(-1)^length`.
    pub fn sign(&self) -> i64 {
        if self.length() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Group composition `self . other`, acting as
    /// `act(self.compose(other), v) = act(self, act(other, v))`.
    /// Panics if the degrees differ.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        assert_eq!(self.degree(), other.degree(), "permutation degrees differ");
        WeylElement {
            perm: self.perm.iter().map(|&i| other.perm[i]).collect(),
        }
    }

    pub fn inverse(&self) -> WeylElement {
        let mut perm = vec![0usize; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            perm[p] = i;
        }
        WeylElement { perm }
    }

    /// Permutes the coordinates of a weight:
    /// `act(w, v)[i] = v[w.perm[i]]`.  The identity fixes every weight
    /// and the trace is always preserved.  Panics if the dimensions
    /// differ.
    pub fn act(&self, v: &Weight) -> Weight {
        assert_eq!(self.degree(), v.dim(), "weight dimension differs");
        Weight {
            coords: self.perm.iter().map(|&i| v.coords[i]).collect(),
        }
    }

    /// Parity computed independently of inversion counting: a cycle of
    /// length `c` contributes `c - 1` transpositions.
    pub fn parity_by_cycles(&self) -> i64 {
        let mut seen = vec![false; self.perm.len()];
        let mut transpositions = 0;
        for start in 0..self.perm.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut here = start;
            while !seen[here] {
                seen[here] = true;
                here = self.perm[here];
                len += 1;
            }
            transpositions += len - 1;
        }
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Advances `perm` to its lexicographic successor in place; returns
/// `false` (leaving the maximal arrangement untouched) when none
/// exists.
fn next_permutation(perm: &mut [usize]) -> bool {
    if perm.len() < 2 {
        return false;
    }
    let mut i = perm.len() - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = perm.len() - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}
