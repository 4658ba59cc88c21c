//! Weyl alternating sums: weight multiplicities, the twisted tensor
//! formula, and the decomposition of a twisted representation into
//! irreducibles.
//!
//! The twisted representation attached to a strict partition `lambda`
//! (with `k` parts) is `V_(lambda - rho) (x) V_rho`, `rho` the
//! staircase.  Its weight multiplicities come from an alternating sum
//! over the Weyl group of partition counts evaluated at `q = 2`:
//!
//! * [`twisted_weight_multiplicity`] — `sum over w of sign(w) *
//!   K_2(w(lambda) - nu)`;
//! * [`classical_weight_multiplicity`] — the classical Kostant
//!   multiplicity formula, used as a reference point;
//! * [`twisted_tensor_multiplicity`] — the double alternating sum for
//!   multiplicities in a product of two twisted representations;
//! * [`twisted_tensor_via_irreducibles`] — the same number computed
//!   through classical tensor coefficients in the character ring, an
//!   independent route used to cross-check the double sum;
//! * [`decompose_twisted`] — the multiplicity table of the
//!   irreducibles inside one twisted representation, with the
//!   subset-of-positive-roots description checked against dominance
//!   and a character-algebra fallback when that description breaks.
//!
//! Terms whose argument falls outside the positive-root cone are
//! skipped before any enumeration starts; in practice almost all of
//! the `(n+1)!` (or `(n+1)!^2`) terms vanish this way.
//!
//! All twisted routines insist on nonnegative coordinates, i.e. strict
//! partitions.  A `gl_k` weight with negative entries can always be
//! shifted into this range by a determinant twist (adding a multiple
//! of `(1, ..., 1)`), which rescales nothing in these formulas.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie_core::{RootSystemA, Weight};
use crate::partition_fn::kostant_q;
use crate::symmetric_fn::{schur, schur_decompose, twisted_character, Partition};

/// Highest-weight-to-multiplicity table; all stored multiplicities are
/// nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DecompositionTable {
    pub entries: BTreeMap<Weight, BigInt>,
}

impl DecompositionTable {
    /// JSON array of `{"weight": "6,3,0", "mult": "2"}`, highest
    /// weight first.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .entries
            .iter()
            .rev()
            .map(|(w, m)| {
                let mut row = serde_json::Map::new();
                row.insert("weight".into(), serde_json::Value::String(w.to_string()));
                row.insert("mult".into(), serde_json::Value::String(m.to_string()));
                serde_json::Value::Object(row)
            })
            .collect();
        serde_json::Value::Array(rows)
    }
}

/// Result of [`decompose_twisted`]: the irreducible multiplicity
/// table, plus a record of whether the subset-sum description applied
/// cleanly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedDecomposition {
    pub table: DecompositionTable,
    /// True when `lambda - alpha_I` was dominant for every subset `I`
    /// of the positive roots, so the table *is* the subset-sum count.
    pub clean: bool,
    /// The offending subsets (as sorted root-index lists) when not
    /// clean; the table then comes from the character expansion
    /// instead.
    pub violations: Vec<Vec<usize>>,
}

fn require_same_dim(rs: &RootSystemA, w: &Weight) -> Result<()> {
    if w.dim() != rs.dim() {
        return Err(Error::DimensionMismatch {
            expected: rs.dim(),
            found: w.dim(),
        });
    }
    Ok(())
}

/// Checks that `lambda` is a strict partition: strictly dominant with
/// nonnegative coordinates.
fn require_strict_partition(rs: &RootSystemA, lambda: &Weight) -> Result<Partition> {
    require_same_dim(rs, lambda)?;
    if !lambda.is_strictly_dominant() {
        return Err(Error::NotStrictlyDominant(lambda.to_string()));
    }
    Partition::from_weight(lambda)
}

/// `K_2(v)`: the distinct-roots q-analogue evaluated at `q = 2`, with
/// the outside-the-cone case short-circuited to zero.
fn k_two(rs: &RootSystemA, v: &Weight) -> Result<BigInt> {
    let coords = rs.to_root_coords(v)?;
    if coords.iter().any(|&c| c < 0) {
        return Ok(BigInt::zero());
    }
    Ok(kostant_q(rs, v)?.evaluate(&BigInt::from(2)))
}

/// The plain Kostant partition count, zero outside the cone.
fn k_plain(rs: &RootSystemA, v: &Weight) -> Result<BigInt> {
    let coords = rs.to_root_coords(v)?;
    if coords.iter().any(|&c| c < 0) {
        return Ok(BigInt::zero());
    }
    crate::partition_fn::kostant(rs, v)
}

/// Multiplicity of the weight `nu` in the twisted representation of
/// `lambda`: `sum over w of sign(w) * K_2(w(lambda) - nu)`.
pub fn twisted_weight_multiplicity(
    rs: &RootSystemA,
    lambda: &Weight,
    nu: &Weight,
) -> Result<BigInt> {
    require_strict_partition(rs, lambda)?;
    require_same_dim(rs, nu)?;
    if lambda.trace() != nu.trace() {
        return Err(Error::TraceMismatch(format!(
            "|{lambda}| = {} but |{nu}| = {}",
            lambda.trace(),
            nu.trace()
        )));
    }
    let mut total = BigInt::zero();
    for w in rs.weyl_group() {
        let diff = &w.act(lambda) - nu;
        let term = k_two(rs, &diff)?;
        if term.is_zero() {
            continue;
        }
        if w.sign() > 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// The classical Kostant multiplicity formula for the irreducible
/// `V_lambda`: `sum over w of sign(w) * K(w(lambda + rho) - mu - rho)`.
pub fn classical_weight_multiplicity(
    rs: &RootSystemA,
    lambda: &Weight,
    mu: &Weight,
) -> Result<BigInt> {
    require_same_dim(rs, lambda)?;
    require_same_dim(rs, mu)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    if lambda.trace() != mu.trace() {
        return Err(Error::TraceMismatch(format!(
            "|{lambda}| = {} but |{mu}| = {}",
            lambda.trace(),
            mu.trace()
        )));
    }
    let shifted = lambda + rs.rho();
    let target = mu + rs.rho();
    let mut total = BigInt::zero();
    for w in rs.weyl_group() {
        let diff = &w.act(&shifted) - &target;
        let term = k_plain(rs, &diff)?;
        if term.is_zero() {
            continue;
        }
        if w.sign() > 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// Multiplicity of the twisted representation of `nu` inside the
/// product of the twisted representations of `lambda` and `mu`:
/// the double alternating sum
/// `sum over (w, s) of sign(w)*sign(s) * K_2(w(lambda) + s(mu) - nu)`.
pub fn twisted_tensor_multiplicity(
    rs: &RootSystemA,
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
) -> Result<BigInt> {
    require_strict_partition(rs, lambda)?;
    require_strict_partition(rs, mu)?;
    require_strict_partition(rs, nu)?;
    if lambda.trace() + mu.trace() != nu.trace() {
        return Err(Error::TraceMismatch(format!(
            "|{lambda}| + |{mu}| = {} but |{nu}| = {}",
            lambda.trace() + mu.trace(),
            nu.trace()
        )));
    }
    let group = rs.weyl_group();
    let lambda_orbit: Vec<(i64, Weight)> = group.iter().map(|w| (w.sign(), w.act(lambda))).collect();
    let mu_orbit: Vec<(i64, Weight)> = group.iter().map(|w| (w.sign(), w.act(mu))).collect();
    let mut total = BigInt::zero();
    for (ls, lw) in &lambda_orbit {
        for (ms, mw) in &mu_orbit {
            let diff = &(lw + mw) - nu;
            let term = k_two(rs, &diff)?;
            if term.is_zero() {
                continue;
            }
            if ls * ms > 0 {
                total += term;
            } else {
                total -= term;
            }
        }
    }
    Ok(total)
}

/// The same tensor multiplicity through classical coefficients: expand
/// the first twisted character in the Schur basis, multiply each
/// component by `s_(mu - rho)`, and read off the coefficient of
/// `s_(nu - rho)`.
pub fn twisted_tensor_via_irreducibles(
    rs: &RootSystemA,
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
) -> Result<BigInt> {
    let lam = require_strict_partition(rs, lambda)?;
    let mu_p = require_strict_partition(rs, mu)?;
    let nu_p = require_strict_partition(rs, nu)?;
    if lambda.trace() + mu.trace() != nu.trace() {
        return Err(Error::TraceMismatch(format!(
            "|{lambda}| + |{mu}| = {} but |{nu}| = {}",
            lambda.trace() + mu.trace(),
            nu.trace()
        )));
    }
    let k = rs.dim();
    let delta = Partition::staircase(k);
    let mu_reduced = mu_p.checked_sub(&delta)?;
    let nu_reduced = nu_p.checked_sub(&delta)?;
    let mu_char = schur(&mu_reduced, k)?;

    // chi~_lambda = sum over beta of N^beta * s_beta.
    let first = schur_decompose(&twisted_character(&lam, k)?)?;
    let mut total = BigInt::zero();
    for (beta, n_beta) in &first {
        let product = schur(beta, k)?.mul_ref(&mu_char);
        let second = schur_decompose(&product)?;
        if let Some(c) = second.get(&nu_reduced) {
            total += n_beta * c;
        }
    }
    Ok(total)
}

/// Decomposes the twisted representation of `lambda` into classical
/// irreducibles.
///
/// The subset-sum description says the multiplicity of `V_mu` is the
/// number of subsets `I` of the positive roots with
/// `mu = lambda - alpha_I` (`alpha_I` the subset sum).  That holds
/// verbatim when every `lambda - alpha_I` is dominant; this routine
/// checks the condition, reports the offending subsets otherwise, and
/// in that case returns the true table computed from the character
/// expansion instead.
pub fn decompose_twisted(rs: &RootSystemA, lambda: &Weight) -> Result<TwistedDecomposition> {
    let lam = require_strict_partition(rs, lambda)?;
    let nroots = rs.num_positive_roots();
    assert!(nroots < 32, "subset enumeration limited to 31 roots");

    let mut entries: BTreeMap<Weight, BigInt> = BTreeMap::new();
    let mut violations: Vec<Vec<usize>> = Vec::new();
    for mask in 0u32..(1 << nroots) {
        let mut alpha_sum = Weight::zero(rs.dim());
        let mut indices = Vec::new();
        for i in 0..nroots {
            if mask & (1 << i) != 0 {
                alpha_sum = &alpha_sum + &rs.positive_roots()[i];
                indices.push(i);
            }
        }
        let candidate = lambda - &alpha_sum;
        if candidate.is_dominant() {
            *entries.entry(candidate).or_insert_with(BigInt::zero) += 1;
        } else {
            violations.push(indices);
        }
    }

    if violations.is_empty() {
        return Ok(TwistedDecomposition {
            table: DecompositionTable { entries },
            clean: true,
            violations,
        });
    }

    // The stated description broke; fall back to expanding the
    // character, which is always the truth.
    let k = rs.dim();
    let expansion = schur_decompose(&twisted_character(&lam, k)?)?;
    let entries = expansion
        .into_iter()
        .map(|(p, c)| (p.to_weight(), c))
        .collect();
    Ok(TwistedDecomposition {
        table: DecompositionTable { entries },
        clean: false,
        violations,
    })
}

/// Total dimension of the twisted representation: the product of the
/// dimensions of its two tensor factors, each obtained by evaluating
/// the corresponding Schur polynomial at all-ones.
pub fn twisted_dimension(rs: &RootSystemA, lambda: &Weight) -> Result<BigInt> {
    let lam = require_strict_partition(rs, lambda)?;
    let k = rs.dim();
    let delta = Partition::staircase(k);
    let reduced = lam.checked_sub(&delta)?;
    Ok(schur(&reduced, k)?.eval_all_ones() * schur(&delta, k)?.eval_all_ones())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetric_fn::weight_coeff;

    fn w(coords: &[i64]) -> Weight {
        Weight::new(coords.to_vec())
    }

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn gl2_twisted_multiplicities_match_the_explicit_tensor_basis() {
        // The twisted representation of (2,0) is V_(1,0) (x) V_(1,0);
        // its four basis tensors have weights (2,0), (1,1), (1,1),
        // (0,2).
        let rs = RootSystemA::new(1).unwrap();
        let lambda = w(&[2, 0]);
        assert_eq!(twisted_weight_multiplicity(&rs, &lambda, &w(&[1, 1])).unwrap(), int(2));
        assert_eq!(twisted_weight_multiplicity(&rs, &lambda, &w(&[2, 0])).unwrap(), int(1));
        assert_eq!(twisted_weight_multiplicity(&rs, &lambda, &w(&[0, 2])).unwrap(), int(1));
        assert_eq!(twisted_weight_multiplicity(&rs, &lambda, &w(&[3, -1])).unwrap(), int(0));
        assert_eq!(twisted_dimension(&rs, &lambda).unwrap(), int(4));
    }

    #[test]
    fn highest_weight_multiplicity_is_one_for_the_staircase() {
        let rs = RootSystemA::new(2).unwrap();
        let rho = w(&[2, 1, 0]);
        assert_eq!(twisted_weight_multiplicity(&rs, &rho, &rho).unwrap(), int(1));
        assert_eq!(twisted_dimension(&rs, &rho).unwrap(), int(8));
    }

    #[test]
    fn twisted_multiplicities_agree_with_character_coefficients() {
        for (n, lambdas) in [
            (1usize, vec![vec![2, 0], vec![3, 1], vec![3, 0]]),
            (2, vec![vec![2, 1, 0], vec![3, 1, 0], vec![4, 2, 1]]),
        ] {
            let rs = RootSystemA::new(n).unwrap();
            for coords in lambdas {
                let lambda = w(&coords);
                let part = Partition::from_weight(&lambda).unwrap();
                let chi = twisted_character(&part, rs.dim()).unwrap();
                let mut support_total = BigInt::zero();
                for exps in chi.terms().keys() {
                    let nu = Weight::new(exps.iter().map(|&e| e as i64).collect());
                    let direct = twisted_weight_multiplicity(&rs, &lambda, &nu).unwrap();
                    assert_eq!(direct, weight_coeff(&chi, &nu), "lambda {lambda}, nu {nu}");
                    support_total += direct;
                }
                assert_eq!(
                    support_total,
                    twisted_dimension(&rs, &lambda).unwrap(),
                    "dimension conservation for {lambda}"
                );
            }
        }
    }

    #[test]
    fn twisted_multiplicity_is_weyl_invariant() {
        let rs = RootSystemA::new(2).unwrap();
        let lambda = w(&[3, 1, 0]);
        let nu = w(&[2, 1, 1]);
        let reference = twisted_weight_multiplicity(&rs, &lambda, &nu).unwrap();
        assert!(reference > BigInt::zero());
        for elt in rs.weyl_group() {
            assert_eq!(
                twisted_weight_multiplicity(&rs, &lambda, &elt.act(&nu)).unwrap(),
                reference
            );
        }
    }

    #[test]
    fn classical_formula_matches_tableau_counts() {
        let rs = RootSystemA::new(2).unwrap();
        assert_eq!(
            classical_weight_multiplicity(&rs, &w(&[1, 1, 0]), &w(&[1, 1, 0])).unwrap(),
            int(1)
        );
        assert_eq!(
            classical_weight_multiplicity(&rs, &w(&[2, 1, 0]), &w(&[1, 1, 1])).unwrap(),
            int(2)
        );
        let a1 = RootSystemA::new(1).unwrap();
        assert_eq!(
            classical_weight_multiplicity(&a1, &w(&[1, 0]), &w(&[0, 1])).unwrap(),
            int(1)
        );

        // Sweep: the alternating sum equals the tableau count from the
        // Schur polynomial at every support weight.
        for coords in [vec![2, 1, 0], vec![3, 1, 0], vec![2, 2, 0]] {
            let lambda = w(&coords);
            let chi = schur(&Partition::from_weight(&lambda).unwrap(), 3).unwrap();
            for exps in chi.terms().keys() {
                let mu = Weight::new(exps.iter().map(|&e| e as i64).collect());
                assert_eq!(
                    classical_weight_multiplicity(&rs, &lambda, &mu).unwrap(),
                    weight_coeff(&chi, &mu),
                    "lambda {lambda}, mu {mu}"
                );
            }
        }
    }

    #[test]
    fn tensor_multiplicities_for_gl2_squares() {
        let rs = RootSystemA::new(1).unwrap();
        let lambda = w(&[2, 0]);
        assert_eq!(
            twisted_tensor_multiplicity(&rs, &lambda, &lambda, &w(&[4, 0])).unwrap(),
            int(1)
        );
        assert_eq!(
            twisted_tensor_multiplicity(&rs, &lambda, &lambda, &w(&[3, 1])).unwrap(),
            int(2)
        );
        // Weight bound: nothing above lambda1 + mu1.
        assert_eq!(
            twisted_tensor_multiplicity(&rs, &w(&[3, 1]), &w(&[3, 1]), &w(&[8, 0])).unwrap(),
            int(0)
        );

        // Dimension bookkeeping: 16 = 1*dim(4,0) + 2*dim(3,1).
        let total = twisted_dimension(&rs, &w(&[4, 0])).unwrap()
            + int(2) * twisted_dimension(&rs, &w(&[3, 1])).unwrap();
        assert_eq!(total, int(16));
    }

    #[test]
    fn both_tensor_routes_agree_and_satisfy_the_character_identity() {
        let rs = RootSystemA::new(1).unwrap();
        let k = 2;
        let pairs = [
            (w(&[2, 0]), w(&[2, 0])),
            (w(&[3, 1]), w(&[2, 0])),
            (w(&[3, 0]), w(&[2, 1])),
        ];
        for (lambda, mu) in pairs {
            let chi_l = twisted_character(&Partition::from_weight(&lambda).unwrap(), k).unwrap();
            let chi_m = twisted_character(&Partition::from_weight(&mu).unwrap(), k).unwrap();
            let product = chi_l.mul_ref(&chi_m);

            let total = lambda.trace() + mu.trace();
            let mut rebuilt = crate::CharacterPoly::new(k);
            for top in 0..=total {
                let low = total - top;
                if top <= low {
                    continue;
                }
                let nu = w(&[top, low]);
                let coeff = twisted_tensor_multiplicity(&rs, &lambda, &mu, &nu).unwrap();
                assert_eq!(
                    coeff,
                    twisted_tensor_via_irreducibles(&rs, &lambda, &mu, &nu).unwrap(),
                    "routes disagree at nu = {nu}"
                );
                assert!(coeff >= BigInt::zero());
                if !coeff.is_zero() {
                    let chi_n =
                        twisted_character(&Partition::from_weight(&nu).unwrap(), k).unwrap();
                    rebuilt.add_assign_ref(&chi_n.scale(&coeff));
                }
            }
            assert_eq!(rebuilt, product, "character identity for {lambda} x {mu}");
        }
    }

    #[test]
    fn tensor_input_validation() {
        let rs = RootSystemA::new(1).unwrap();
        assert!(matches!(
            twisted_tensor_multiplicity(&rs, &w(&[2, 0]), &w(&[2, 0]), &w(&[3, 0])),
            Err(Error::TraceMismatch(_))
        ));
        assert!(matches!(
            twisted_tensor_multiplicity(&rs, &w(&[2, 2]), &w(&[2, 0]), &w(&[4, 2])),
            Err(Error::NotStrictlyDominant(_))
        ));
        assert!(matches!(
            twisted_weight_multiplicity(&rs, &w(&[2, 0]), &w(&[1, 0])),
            Err(Error::TraceMismatch(_))
        ));
        assert!(matches!(
            classical_weight_multiplicity(&rs, &w(&[0, 2]), &w(&[1, 1])),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn decomposition_of_a_deep_gl3_weight() {
        let rs = RootSystemA::new(2).unwrap();
        let lambda = w(&[6, 3, 0]);
        let result = decompose_twisted(&rs, &lambda).unwrap();
        assert!(result.clean);
        assert!(result.violations.is_empty());
        assert_eq!(result.table.entries.len(), 7);
        assert_eq!(result.table.entries[&w(&[6, 3, 0])], int(1));
        // lambda minus (alpha1 + alpha2): two subsets reach it.
        assert_eq!(result.table.entries[&w(&[5, 3, 1])], int(2));

        // The table rebuilds the twisted character exactly.
        let mut rebuilt = crate::CharacterPoly::new(3);
        for (mu, c) in &result.table.entries {
            let s = schur(&Partition::from_weight(mu).unwrap(), 3).unwrap();
            rebuilt.add_assign_ref(&s.scale(c));
        }
        let chi = twisted_character(&Partition::from_weight(&lambda).unwrap(), 3).unwrap();
        assert_eq!(rebuilt, chi);

        // Dimension bookkeeping.
        let mut total = BigInt::zero();
        for (mu, c) in &result.table.entries {
            total += c * schur(&Partition::from_weight(mu).unwrap(), 3).unwrap().eval_all_ones();
        }
        assert_eq!(total, twisted_dimension(&rs, &lambda).unwrap());
    }

    #[test]
    fn decomposition_flags_dominance_violations_and_still_tells_the_truth() {
        let rs = RootSystemA::new(1).unwrap();
        // lambda = (1,0): subtracting the single positive root gives
        // (0,1), which is not dominant.
        let result = decompose_twisted(&rs, &w(&[1, 0])).unwrap();
        assert!(!result.clean);
        assert_eq!(result.violations, vec![vec![0]]);
        assert_eq!(result.table.entries.len(), 1);
        assert_eq!(result.table.entries[&w(&[1, 0])], int(1));

        // A clean gl2 case for contrast.
        let clean = decompose_twisted(&rs, &w(&[2, 0])).unwrap();
        assert!(clean.clean);
        assert_eq!(clean.table.entries.len(), 2);
        assert_eq!(clean.table.entries[&w(&[2, 0])], int(1));
        assert_eq!(clean.table.entries[&w(&[1, 1])], int(1));
    }

    #[test]
    fn twisted_dimension_examples() {
        let a2 = RootSystemA::new(2).unwrap();
        assert_eq!(twisted_dimension(&a2, &w(&[3, 1, 0])).unwrap(), int(24));
        let a1 = RootSystemA::new(1).unwrap();
        assert_eq!(twisted_dimension(&a1, &w(&[1, 0])).unwrap(), int(2));
        assert!(matches!(
            twisted_dimension(&a2, &w(&[2, 2, 0])),
            Err(Error::NotStrictlyDominant(_))
        ));
    }

    #[test]
    fn decomposition_table_serializes_highest_weight_first() {
        let rs = RootSystemA::new(1).unwrap();
        let result = decompose_twisted(&rs, &w(&[2, 0])).unwrap();
        let json = result.table.to_json();
        assert_eq!(
            json.to_string(),
            r#"[{"mult":"1","weight":"2,0"},{"mult":"1","weight":"1,1"}]"#
        );
    }
}
