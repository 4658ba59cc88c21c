//! Exact character algebra: Schur polynomials and the twisted
//! characters built from them.
//!
//! Two independent constructions of the Schur polynomial are provided —
//! semistandard-tableau enumeration ([`schur`]) and the bialternant
//! ratio with exact polynomial division ([`schur_via_alternants`]) — so
//! each can validate the other.  [`twisted_character`] forms the
//! product `s_(lambda - delta) * s_delta` (`delta` the staircase),
//! which is the character the Weyl-alternating-sum routines in the
//! `multiplicity` module are tested against.
//!
//! Everything here is plain `BigInt` polynomial arithmetic in `k`
//! variables; nothing is floating point and nothing is truncated.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::lie_core::{Weight, WeylElement};
use crate::CharacterPoly;

/// A partition: weakly decreasing nonnegative parts (empty parts
/// allowed, so lengths are flexible and padding with zeros is cheap).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    /// Validates weakly decreasing, nonnegative parts.
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p >= 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if !ok {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// `|lambda|`: the sum of the parts.
    pub fn size(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// All parts distinct (equivalently strictly decreasing).
    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Extends to exactly `k` parts with zeros; fails when there are
    /// already more than `k`.
    pub fn padded(&self, k: usize) -> Result<Partition> {
        if self.parts.len() > k {
            return Err(Error::TooManyParts {
                parts: self.parts.len(),
                vars: k,
            });
        }
        let mut parts = self.parts.clone();
        parts.resize(k, 0);
        Ok(Partition { parts })
    }

    /// The staircase `(k-1, k-2, ..., 1, 0)`.
    pub fn staircase(k: usize) -> Partition {
        Partition {
            parts: (0..k).rev().map(|p| p as i64).collect(),
        }
    }

    /// Componentwise difference, validated to still be a partition.
    pub fn checked_sub(&self, rhs: &Partition) -> Result<Partition> {
        if self.parts.len() != rhs.parts.len() {
            return Err(Error::DimensionMismatch {
                expected: self.parts.len(),
                found: rhs.parts.len(),
            });
        }
        Partition::new(
            self.parts
                .iter()
                .zip(&rhs.parts)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    /// Reads a dominant, nonnegative weight as a partition.
    pub fn from_weight(w: &Weight) -> Result<Partition> {
        if !w.is_dominant() || !w.is_nonnegative() {
            return Err(Error::InvalidPartition(w.to_string()));
        }
        Ok(Partition {
            parts: w.coords.clone(),
        })
    }

    pub fn to_weight(&self) -> Weight {
        Weight::new(self.parts.clone())
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts, e.g. `2,1,0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_weight())
    }
}

/// The Schur polynomial `s_lambda(x_1, ..., x_k)` by semistandard
/// tableau enumeration: the coefficient of a monomial is the number of
/// tableaux of shape `lambda` with that content (rows weakly
/// increasing, columns strictly increasing, entries in `1..=k`).
pub fn schur(lambda: &Partition, k: usize) -> Result<CharacterPoly> {
    let lam = lambda.padded(k)?;
    let shape: Vec<usize> = lam.parts().iter().map(|&p| p as usize).collect();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut chi = CharacterPoly::new(k);
    if cells.is_empty() {
        chi.add_term(vec![0; k], BigInt::one());
        return Ok(chi);
    }
    let mut grid = vec![vec![0usize; shape[0]]; shape.len()];
    let mut content = vec![0u32; k];
    fill(&cells, 0, k, &mut grid, &mut content, &mut chi);
    return Ok(chi);

    fn fill(
        cells: &[(usize, usize)],
        at: usize,
        k: usize,
        grid: &mut [Vec<usize>],
        content: &mut Vec<u32>,
        chi: &mut CharacterPoly,
    ) {
        if at == cells.len() {
            chi.add_term(content.clone(), BigInt::one());
            return;
        }
        let (r, c) = cells[at];
        let left = if c > 0 { grid[r][c - 1] } else { 1 };
        let above = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for v in left.max(above)..=k {
            grid[r][c] = v;
            content[v - 1] += 1;
            fill(cells, at + 1, k, grid, content, chi);
            content[v - 1] -= 1;
        }
    }
}

/// The Schur polynomial as a ratio of alternants: the determinant
/// `det(x_i^(lambda_j + k - 1 - j))` divided by the Vandermonde
/// determinant, with every binomial division checked to be exact.
pub fn schur_via_alternants(lambda: &Partition, k: usize) -> Result<CharacterPoly> {
    let lam = lambda.padded(k)?;
    let exps: Vec<u32> = lam
        .parts()
        .iter()
        .enumerate()
        .map(|(j, &p)| p as u32 + (k - 1 - j) as u32)
        .collect();
    let mut alternant = CharacterPoly::new(k);
    for w in WeylElement::all(k) {
        let term: Vec<u32> = w.perm().iter().map(|&p| exps[p]).collect();
        alternant.add_term(term, BigInt::from(w.sign()));
    }
    let mut poly = alternant;
    for i in 0..k {
        for j in (i + 1)..k {
            poly = poly
                .divide_exact_by_binomial(i, j)
                .ok_or(Error::InexactDivision)?;
        }
    }
    Ok(poly)
}

/// The character of the twisted representation attached to a strict
/// partition `lambda`: `s_(lambda - delta) * s_delta` in `k`
/// variables, `delta` the staircase.
pub fn twisted_character(lambda: &Partition, k: usize) -> Result<CharacterPoly> {
    let lam = lambda.padded(k)?;
    if !lam.is_strict() {
        return Err(Error::NotStrict(lam.to_string()));
    }
    let delta = Partition::staircase(k);
    let reduced = lam.checked_sub(&delta)?;
    Ok(schur(&reduced, k)?.mul_ref(&schur(&delta, k)?))
}

/// The coefficient of the monomial `x^beta` in `chi`; zero whenever
/// `beta` has a negative coordinate or the monomial is absent.
/// Panics if the coordinate count disagrees with the variable count.
pub fn weight_coeff(chi: &CharacterPoly, beta: &Weight) -> BigInt {
    assert_eq!(chi.vars(), beta.dim(), "weight length != variable count");
    if !beta.is_nonnegative() {
        return BigInt::from(0);
    }
    let exps: Vec<u32> = beta.coords.iter().map(|&c| c as u32).collect();
    chi.coeff(&exps)
}

/// Splits off the last variable, mapping each exponent `d` of `x_k` to
/// the `(k-1)`-variable polynomial multiplying `x_k^d`.  Summing all
/// grades is the same as setting `x_k = 1`.
pub fn specialize_last(chi: &CharacterPoly) -> BTreeMap<u32, CharacterPoly> {
    chi.split_last_var()
}

/// The dual Pieri rule: the partitions obtained from `mu` by adding a
/// vertical strip of `m` boxes (at most one per row), within `k` rows.
/// Returned in descending lexicographic order; empty when `m > k`.
pub fn dual_pieri(mu: &Partition, m: usize, k: usize) -> Result<Vec<Partition>> {
    let mu = mu.padded(k)?;
    let mut out = Vec::new();
    if m > k {
        return Ok(out);
    }
    for mask in 0u32..(1 << k) {
        if mask.count_ones() as usize != m {
            continue;
        }
        let parts: Vec<i64> = mu
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &p)| p + i64::from(mask >> i & 1))
            .collect();
        if parts.windows(2).all(|w| w[0] >= w[1]) {
            out.push(Partition { parts });
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

/// Expands a symmetric polynomial in the Schur basis by repeatedly
/// stripping the lexicographically leading term.  Fails with
/// [`Error::NotSymmetric`] when some leading exponent is not weakly
/// decreasing, which cannot happen for symmetric input.
pub fn schur_decompose(chi: &CharacterPoly) -> Result<BTreeMap<Partition, BigInt>> {
    let k = chi.vars();
    let mut rem = chi.clone();
    let mut out = BTreeMap::new();
    while let Some((exps, coeff)) = rem.leading_term_lex() {
        if exps.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSymmetric);
        }
        let m = Partition::new(exps.iter().map(|&e| e as i64).collect())?;
        let coeff = coeff.clone();
        rem.sub_assign_ref(&schur(&m, k)?.scale(&coeff));
        out.insert(m, coeff);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn part(parts: &[i64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Independent dimension oracle: the hook-free product formula
    /// `prod_(i<j) (lambda_i - lambda_j + j - i) / (j - i)`.
    fn product_formula_dim(lambda: &Partition, k: usize) -> BigInt {
        let lam = lambda.padded(k).unwrap();
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for i in 0..k {
            for j in (i + 1)..k {
                num *= BigInt::from(lam.parts()[i] - lam.parts()[j] + (j - i) as i64);
                den *= BigInt::from((j - i) as i64);
            }
        }
        assert!((num.clone() % den.clone()).is_zero());
        num / den
    }

    /// All partitions with exactly `k` parts, each at most `max`.
    fn partitions_up_to(max: i64, k: usize) -> Vec<Partition> {
        let mut out = vec![vec![]];
        for _ in 0..k {
            let mut next = Vec::new();
            for p in &out {
                let hi = p.last().copied().unwrap_or(max);
                for v in 0..=hi {
                    let mut p2: Vec<i64> = p.clone();
                    p2.push(v);
                    next.push(p2);
                }
            }
            out = next;
        }
        out.into_iter().map(part2).collect()
    }

    fn part2(parts: Vec<i64>) -> Partition {
        Partition::new(parts).unwrap()
    }

    #[test]
    fn partition_validation_and_predicates() {
        assert!(Partition::new(vec![3, 1, 2]).is_err());
        assert!(Partition::new(vec![2, -1]).is_err());
        assert!(part(&[3, 1, 0]).is_strict());
        assert!(!part(&[3, 3, 0]).is_strict());
        assert_eq!(part(&[3, 1]).size(), 4);
        assert_eq!(Partition::staircase(4), part(&[3, 2, 1, 0]));
        assert_eq!(part(&[2, 1]).padded(4).unwrap(), part(&[2, 1, 0, 0]));
        assert!(part(&[2, 1, 1]).padded(2).is_err());
        assert_eq!(
            part(&[3, 2, 1]).checked_sub(&part(&[2, 1, 0])).unwrap(),
            part(&[1, 1, 1])
        );
        assert_eq!(
            part(&[3, 2]).checked_sub(&part(&[1, 1])).unwrap(),
            part(&[2, 1])
        );
        // Componentwise difference that is not weakly decreasing.
        assert!(part(&[2, 2]).checked_sub(&part(&[2, 0])).is_err());
        assert!(part(&[1, 0]).checked_sub(&part(&[0, 0, 0])).is_err());
    }

    #[test]
    fn schur_small_examples() {
        let s10 = schur(&part(&[1, 0]), 2).unwrap();
        assert_eq!(s10.coeff(&[1, 0]), BigInt::one());
        assert_eq!(s10.coeff(&[0, 1]), BigInt::one());
        assert_eq!(s10.terms().len(), 2);

        let s210 = schur(&part(&[2, 1, 0]), 3).unwrap();
        assert_eq!(s210.coeff(&[1, 1, 1]), BigInt::from(2));
        assert_eq!(s210.coeff(&[2, 1, 0]), BigInt::one());
        assert_eq!(s210.eval_all_ones(), BigInt::from(8));
        assert!(s210.is_symmetric());

        let s20 = schur(&part(&[2, 0]), 2).unwrap();
        assert_eq!(s20.coeff(&[2, 0]), BigInt::one());
        assert_eq!(s20.coeff(&[1, 1]), BigInt::one());
        assert_eq!(s20.coeff(&[0, 2]), BigInt::one());

        let empty = schur(&part(&[0, 0]), 2).unwrap();
        assert_eq!(empty.eval_all_ones(), BigInt::one());
    }

    #[test]
    fn schur_dimension_matches_the_product_formula() {
        for k in 2..=4usize {
            for lam in partitions_up_to(3, k) {
                let dim = schur(&lam, k).unwrap().eval_all_ones();
                assert_eq!(dim, product_formula_dim(&lam, k), "lambda = {lam}");
            }
        }
    }

    #[test]
    fn tableau_and_alternant_routes_agree() {
        for k in 1..=4usize {
            for lam in partitions_up_to(4, k) {
                assert_eq!(
                    schur(&lam, k).unwrap(),
                    schur_via_alternants(&lam, k).unwrap(),
                    "lambda = {lam}, k = {k}"
                );
            }
        }
    }

    #[test]
    fn staircase_schur_is_the_product_of_coordinate_sums() {
        for k in 2..=4usize {
            let delta = Partition::staircase(k);
            let mut product = CharacterPoly::constant(k, BigInt::one());
            for i in 0..k {
                for j in (i + 1)..k {
                    product = product.mul_binomial_sum(i, j);
                }
            }
            assert_eq!(schur(&delta, k).unwrap(), product);
            assert_eq!(schur_via_alternants(&delta, k).unwrap(), product);
        }
    }

    #[test]
    fn twisted_character_examples() {
        let chi = twisted_character(&part(&[1, 0]), 2).unwrap();
        assert_eq!(chi, schur(&part(&[1, 0]), 2).unwrap());

        let chi20 = twisted_character(&part(&[2, 0]), 2).unwrap();
        assert_eq!(chi20.coeff(&[2, 0]), BigInt::one());
        assert_eq!(chi20.coeff(&[1, 1]), BigInt::from(2));
        assert_eq!(chi20.coeff(&[0, 2]), BigInt::one());
        assert_eq!(chi20.eval_all_ones(), BigInt::from(4));

        assert!(matches!(
            twisted_character(&part(&[2, 2, 0]), 3),
            Err(Error::NotStrict(_))
        ));
        // Padding can silently break strictness; that must error too.
        assert!(twisted_character(&part(&[2, 0]), 3).is_err());
    }

    #[test]
    fn weight_coefficients() {
        let chi20 = twisted_character(&part(&[2, 0]), 2).unwrap();
        assert_eq!(weight_coeff(&chi20, &Weight::new(vec![1, 1])), BigInt::from(2));
        assert_eq!(weight_coeff(&chi20, &Weight::new(vec![5, 5])), BigInt::zero());
        assert_eq!(weight_coeff(&chi20, &Weight::new(vec![2, 0])), BigInt::one());
        assert_eq!(weight_coeff(&chi20, &Weight::new(vec![-1, 3])), BigInt::zero());
    }

    #[test]
    fn specialize_last_grades_by_the_dropped_exponent() {
        let s10 = schur(&part(&[1, 0]), 2).unwrap();
        let grades = specialize_last(&s10);
        assert_eq!(grades[&0], CharacterPoly::var(1, 0));
        assert_eq!(grades[&1], CharacterPoly::constant(1, BigInt::one()));

        let chi20 = twisted_character(&part(&[2, 0]), 2).unwrap();
        let grades = specialize_last(&chi20);
        assert_eq!(grades[&0].coeff(&[2]), BigInt::one());
        assert_eq!(grades[&1].coeff(&[1]), BigInt::from(2));
        assert_eq!(grades[&2].coeff(&[0]), BigInt::one());

        let constant = CharacterPoly::constant(2, BigInt::from(7));
        let grades = specialize_last(&constant);
        assert_eq!(grades.len(), 1);
        assert_eq!(grades[&0].coeff(&[0]), BigInt::from(7));
    }

    #[test]
    fn dual_pieri_examples() {
        assert_eq!(
            dual_pieri(&part(&[1, 0]), 1, 2).unwrap(),
            vec![part(&[2, 0]), part(&[1, 1])]
        );
        assert_eq!(dual_pieri(&part(&[1, 0]), 0, 2).unwrap(), vec![part(&[1, 0])]);
        assert_eq!(dual_pieri(&part(&[1, 1]), 1, 2).unwrap(), vec![part(&[2, 1])]);
        assert!(dual_pieri(&part(&[1, 0]), 3, 2).unwrap().is_empty());
    }

    #[test]
    fn dual_pieri_matches_polynomial_multiplication() {
        let k = 3;
        for mu in partitions_up_to(3, k) {
            for m in 0..=k {
                // e_m is the Schur polynomial of a one-column shape.
                let column = part2(vec![1; m]).padded(k).unwrap();
                let e_m = schur(&column, k).unwrap();
                let lhs = schur(&mu, k).unwrap().mul_ref(&e_m);
                let mut rhs = CharacterPoly::new(k);
                for nu in dual_pieri(&mu, m, k).unwrap() {
                    rhs.add_assign_ref(&schur(&nu, k).unwrap());
                }
                assert_eq!(lhs, rhs, "mu = {mu}, m = {m}");
            }
        }
    }

    #[test]
    fn one_variable_specialization_expands_over_interlacing_partitions() {
        fn interlace(gamma: &Partition, mu: &Partition) -> bool {
            let g = gamma.parts();
            let m = mu.parts();
            (0..g.len()).all(|i| m[i] >= g[i] && g[i] >= m[i + 1])
        }
        for k in 2..=4usize {
            for lam in partitions_up_to(4, k) {
                let mut lhs = CharacterPoly::new(k - 1);
                for g in specialize_last(&schur(&lam, k).unwrap()).values() {
                    lhs.add_assign_ref(g);
                }
                let mut rhs = CharacterPoly::new(k - 1);
                for mu in partitions_up_to(4, k - 1) {
                    if interlace(&mu, &lam) {
                        rhs.add_assign_ref(&schur(&mu, k - 1).unwrap());
                    }
                }
                assert_eq!(lhs, rhs, "lambda = {lam}, k = {k}");
            }
        }
    }

    #[test]
    fn schur_decomposition_round_trips_products() {
        let k = 2;
        let s1 = schur(&part(&[1, 0]), k).unwrap();
        let table = schur_decompose(&s1.mul_ref(&s1)).unwrap();
        assert_eq!(table.len(), 2);
        assert_eq!(table[&part(&[2, 0])], BigInt::one());
        assert_eq!(table[&part(&[1, 1])], BigInt::one());

        for (a, b) in [
            (part(&[2, 1, 0]), part(&[1, 1, 0])),
            (part(&[3, 1, 0]), part(&[2, 0, 0])),
            (part(&[2, 2, 0]), part(&[2, 1, 0])),
        ] {
            let product = schur(&a, 3).unwrap().mul_ref(&schur(&b, 3).unwrap());
            let table = schur_decompose(&product).unwrap();
            let mut rebuilt = CharacterPoly::new(3);
            for (m, c) in &table {
                assert!(*c > BigInt::zero());
                rebuilt.add_assign_ref(&schur(m, 3).unwrap().scale(c));
            }
            assert_eq!(rebuilt, product, "{a} x {b}");
        }

        assert!(schur_decompose(&CharacterPoly::var(2, 1)).is_err());
    }

    #[test]
    fn schur_outputs_are_symmetric_under_random_permutations() {
        let perms = [[2usize, 0, 1], [1, 2, 0], [2, 1, 0]];
        for lam in [part(&[3, 1, 0]), part(&[2, 2, 1]), part(&[4, 2, 0])] {
            let s = schur(&lam, 3).unwrap();
            for p in &perms {
                assert_eq!(s.permute_vars(p), s, "lambda = {lam}");
            }
        }
    }
}
