//! The Kostant partition function and its q-analogues.
//!
//! For a root-lattice element `mu`, the solutions counted here are the
//! vectors `(k_alpha)` of nonnegative integers with
//! `sum k_alpha * alpha = mu` over the positive roots:
//!
//! * [`kostant`] — the plain count `K(mu)`;
//! * [`kostant_q`] — `K_q(mu) = sum q^(number of nonzero k_alpha)`;
//! * [`kostant_q_classical`] — `K^_q(mu) = sum q^(sum of k_alpha)`;
//! * [`subset_sum_p`] — `P(mu)`, the count with every `k_alpha <= 1`;
//! * [`kostant_restricted`] — `K_J(mu)`, roots outside `J` forced to 0;
//! * [`kq_inclusion_exclusion`] — `K_q` recomputed from the `K_J`
//!   family, an independent cross-check of the direct enumeration.
//!
//! All counting goes through one depth-first kernel over simple-root
//! coordinates.  Roots are visited in height-descending order so the
//! widest-support roots bound the search early, and a branch is
//! abandoned as soon as some coordinate of the remainder cannot be
//! reached by the roots still ahead.  Everything is exact integer
//! arithmetic.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lie_core::{RootSystemA, Weight};
use crate::QPolynomial;

/// One solution of `sum k_alpha * alpha = mu`: the multiplicity of
/// each positive root, aligned with [`RootSystemA::positive_roots`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootCombination {
    pub k_alpha: Vec<i64>,
}

/// Depth-first enumeration state over a fixed root subset.
struct Dfs<F: FnMut(&[i64])> {
    /// `(original root index, simple-root coordinates)`, sorted by
    /// height (coordinate sum) descending.
    roots: Vec<(usize, Vec<i64>)>,
    /// `suffix_support[t]` = bitmask of simple-root coordinates that
    /// roots `t..` can still decrease.
    suffix_support: Vec<u64>,
    /// Cap every multiplicity at 1 (for the subset counter `P`).
    cap_one: bool,
    /// Current multiplicities, indexed by original root index.
    counts: Vec<i64>,
    emit: F,
}

impl<F: FnMut(&[i64])> Dfs<F> {
    fn go(&mut self, t: usize, remaining: &mut [i64]) {
        let mask = self.suffix_support[t];
        for (i, &r) in remaining.iter().enumerate() {
            debug_assert!(r >= 0);
            if r > 0 && mask & (1u64 << i) == 0 {
                return;
            }
        }
        if t == self.roots.len() {
            (self.emit)(&self.counts);
            return;
        }
        let (orig, coords) = {
            let (orig, ref coords) = self.roots[t];
            (orig, coords.clone())
        };
        let mut max = i64::MAX;
        for (i, &c) in coords.iter().enumerate() {
            if c > 0 {
                max = max.min(remaining[i] / c);
            }
        }
        if self.cap_one {
            max = max.min(1);
        }
        for count in 0..=max {
            if count > 0 {
                for (i, &c) in coords.iter().enumerate() {
                    remaining[i] -= c;
                }
            }
            self.counts[orig] = count;
            self.go(t + 1, remaining);
        }
        self.counts[orig] = 0;
        for (i, &c) in coords.iter().enumerate() {
            remaining[i] += max * c;
        }
    }
}

/// Runs the kernel over the roots listed in `j` (indices into the
/// positive-root order), calling `emit` once per solution with the
/// full-length multiplicity vector.
fn enumerate_combinations(
    rs: &RootSystemA,
    j: &[usize],
    target: &[i64],
    cap_one: bool,
    emit: impl FnMut(&[i64]),
) {
    if target.iter().any(|&t| t < 0) {
        return;
    }
    let mut roots: Vec<(usize, Vec<i64>)> = j
        .iter()
        .map(|&idx| (idx, rs.root_in_simple_coords(idx)))
        .collect();
    roots.sort_by_key(|(idx, coords)| (-coords.iter().sum::<i64>(), *idx));
    let mut suffix_support = vec![0u64; roots.len() + 1];
    for t in (0..roots.len()).rev() {
        let mut mask = suffix_support[t + 1];
        for (i, &c) in roots[t].1.iter().enumerate() {
            if c > 0 {
                mask |= 1u64 << i;
            }
        }
        suffix_support[t] = mask;
    }
    let mut dfs = Dfs {
        roots,
        suffix_support,
        cap_one,
        counts: vec![0; rs.num_positive_roots()],
        emit,
    };
    let mut remaining = target.to_vec();
    dfs.go(0, &mut remaining);
}

fn all_roots(rs: &RootSystemA) -> Vec<usize> {
    (0..rs.num_positive_roots()).collect()
}

fn validate_indices(rs: &RootSystemA, j: &[usize]) -> Result<()> {
    let n = rs.num_positive_roots();
    for &idx in j {
        if idx >= n {
            return Err(Error::InvalidRootIndex(idx, n));
        }
    }
    Ok(())
}

/// All ways of writing `mu` as a nonnegative integer combination of
/// positive roots, in a fixed deterministic order.  Empty when `mu`
/// lies outside the cone; fails when `mu` is not in the root lattice.
pub fn enumerate_q(rs: &RootSystemA, mu: &Weight) -> Result<Vec<RootCombination>> {
    let target = rs.to_root_coords(mu)?;
    let mut out = Vec::new();
    enumerate_combinations(rs, &all_roots(rs), &target, false, |counts| {
        out.push(RootCombination {
            k_alpha: counts.to_vec(),
        });
    });
    Ok(out)
}

/// The Kostant partition function `K(mu)`.
pub fn kostant(rs: &RootSystemA, mu: &Weight) -> Result<BigInt> {
    let target = rs.to_root_coords(mu)?;
    let mut count = BigInt::zero();
    enumerate_combinations(rs, &all_roots(rs), &target, false, |_| {
        count += 1;
    });
    Ok(count)
}

/// The q-analogue grading each solution by its number of distinct
/// roots used: `K_q(mu) = sum q^(number of nonzero k_alpha)`.
pub fn kostant_q(rs: &RootSystemA, mu: &Weight) -> Result<QPolynomial> {
    let target = rs.to_root_coords(mu)?;
    let mut poly = QPolynomial::zero();
    enumerate_combinations(rs, &all_roots(rs), &target, false, |counts| {
        let nonzero = counts.iter().filter(|&&c| c > 0).count() as u32;
        poly.add_term(nonzero, BigInt::one());
    });
    Ok(poly)
}

/// The q-analogue grading each solution by its total number of roots
/// counted with multiplicity: `sum q^(sum of k_alpha)`.
pub fn kostant_q_classical(rs: &RootSystemA, mu: &Weight) -> Result<QPolynomial> {
    let target = rs.to_root_coords(mu)?;
    let mut poly = QPolynomial::zero();
    enumerate_combinations(rs, &all_roots(rs), &target, false, |counts| {
        let total: i64 = counts.iter().sum();
        poly.add_term(total as u32, BigInt::one());
    });
    Ok(poly)
}

/// `P(nu)`: the number of ways of writing `nu` as a sum of *distinct*
/// positive roots (each `k_alpha` is 0 or 1).
pub fn subset_sum_p(rs: &RootSystemA, nu: &Weight) -> Result<BigInt> {
    let target = rs.to_root_coords(nu)?;
    let mut count = BigInt::zero();
    enumerate_combinations(rs, &all_roots(rs), &target, true, |_| {
        count += 1;
    });
    Ok(count)
}

/// `K_J(mu)`: the partition count using only the roots whose indices
/// appear in `j`.
pub fn kostant_restricted(rs: &RootSystemA, j: &[usize], mu: &Weight) -> Result<BigInt> {
    validate_indices(rs, j)?;
    let target = rs.to_root_coords(mu)?;
    Ok(kostant_restricted_on_coords(rs, j, &target))
}

/// `K_J` on simple-root coordinates directly; used by the chamber
/// machinery, which works in that coordinate system throughout.
pub fn kostant_restricted_on_coords(rs: &RootSystemA, j: &[usize], target: &[i64]) -> BigInt {
    let mut count = BigInt::zero();
    enumerate_combinations(rs, j, target, false, |_| {
        count += 1;
    });
    count
}

/// Recomputes `K_q(mu)` from the restricted counts by
/// inclusion–exclusion over pairs of root subsets:
/// `K_q(mu) = sum over I of (q-1)^|I| * sum over J inside I of
/// (-1)^|J| * K_(complement of J)(mu)`.
///
/// The subset-pair count is `3^N`, so this cross-check is limited to
/// rank `n <= 3` (`N <= 6`, 729 pairs).
pub fn kq_inclusion_exclusion(rs: &RootSystemA, mu: &Weight) -> Result<QPolynomial> {
    if rs.rank() > 3 {
        return Err(Error::UnsupportedRank(rs.rank()));
    }
    let target = rs.to_root_coords(mu)?;
    let nroots = rs.num_positive_roots();
    let full: u32 = (1u32 << nroots) - 1;

    // K_{[N]\J}(mu), memoized by the complement's bitmask.
    let mut memo: HashMap<u32, BigInt> = HashMap::new();
    let mut k_for_mask = |mask: u32| -> BigInt {
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let indices: Vec<usize> = (0..nroots).filter(|&i| mask & (1 << i) != 0).collect();
        let v = kostant_restricted_on_coords(rs, &indices, &target);
        memo.insert(mask, v.clone());
        v
    };

    // Collect, per |I|, the signed inner sums; then attach (q-1)^|I|.
    let mut by_size: Vec<BigInt> = vec![BigInt::zero(); nroots + 1];
    for i_mask in 0..=full {
        let isize = i_mask.count_ones() as usize;
        // Iterate over all submasks J of I, including the empty set.
        let mut j_mask = i_mask;
        loop {
            let term = k_for_mask(full & !j_mask);
            if j_mask.count_ones() % 2 == 0 {
                by_size[isize] += term;
            } else {
                by_size[isize] -= term;
            }
            if j_mask == 0 {
                break;
            }
            j_mask = (j_mask - 1) & i_mask;
        }
    }

    let q_minus_one = {
        let mut p = QPolynomial::q();
        p.add_term(0, BigInt::from(-1));
        p
    };
    let mut power = QPolynomial::one();
    let mut result = QPolynomial::zero();
    for coeff in by_size {
        result += &power.scale(&coeff);
        power = &power * &q_minus_one;
    }
    Ok(result)
}
