//! Interlacing combinatorics, branching of twisted representations,
//! and twisted Gelfand-Tsetlin diagrams.
//!
//! Restricting the twisted representation of a strict partition
//! `lambda` from `gl_k` to `gl_(k-1)` produces the twisted
//! representations of exactly the strict `nu` interlacing `lambda`,
//! each with multiplicity `2^nabla(lambda, nu)` where
//! [`nabla`] counts the positions strictly wedged between consecutive
//! parts.  Iterating down to `gl_1` yields the twisted
//! Gelfand-Tsetlin diagrams: chains of strict partitions, one row per
//! level, consecutive rows interlacing.  Each diagram contributes
//! `2^nabla(D)` to the dimension and sits in the weight read off from
//! its successive row-sum differences, giving a second, fully
//! combinatorial route to the dimensions and weight multiplicities
//! computed by the `multiplicity` module.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::lie_core::Weight;
use crate::symmetric_fn::Partition;

/// Does `gamma` interlace `mu`, i.e.
/// `mu_1 >= gamma_1 >= mu_2 >= ... >= gamma_(m-1) >= mu_m`?
/// `gamma` must have exactly one part fewer than `mu`.
pub fn interlaces(gamma: &Partition, mu: &Partition) -> Result<bool> {
    if gamma.num_parts() + 1 != mu.num_parts() {
        return Err(Error::DimensionMismatch {
            expected: mu.num_parts().saturating_sub(1),
            found: gamma.num_parts(),
        });
    }
    let g = gamma.parts();
    let m = mu.parts();
    Ok((0..g.len()).all(|i| m[i] >= g[i] && g[i] >= m[i + 1]))
}

/// The number of positions where `gamma` is strictly wedged:
/// `mu_i > gamma_i > mu_(i+1)`.  Requires interlacing input.
pub fn nabla(mu: &Partition, gamma: &Partition) -> Result<usize> {
    if !interlaces(gamma, mu)? {
        return Err(Error::NotInterlacing(format!("{gamma} vs {mu}")));
    }
    let g = gamma.parts();
    let m = mu.parts();
    Ok((0..g.len())
        .filter(|&i| m[i] > g[i] && g[i] > m[i + 1])
        .count())
}

/// All strict partitions with one part fewer that interlace `row`,
/// in descending lexicographic order.
fn strict_interlacing_rows(row: &[i64]) -> Vec<Vec<i64>> {
    let m = row.len();
    let mut out = Vec::new();
    if m == 0 {
        return out;
    }
    let mut cur = vec![0i64; m - 1];
    descend(row, 0, &mut cur, &mut out);
    return out;

    fn descend(row: &[i64], i: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        let hi = if i == 0 {
            row[0]
        } else {
            (cur[i - 1] - 1).min(row[i])
        };
        let lo = row[i + 1];
        let mut v = hi;
        while v >= lo {
            cur[i] = v;
            descend(row, i + 1, cur, out);
            v -= 1;
        }
    }
}

fn require_strict(lambda: &Partition, k: usize) -> Result<Partition> {
    let lam = lambda.padded(k)?;
    if !lam.is_strict() {
        return Err(Error::NotStrict(lam.to_string()));
    }
    Ok(lam)
}

/// Branches the twisted representation of `lambda` from `gl_k` down
/// one level: the strict `nu` interlacing `lambda`, each paired with
/// its multiplicity `2^nabla(lambda, nu)`.  Listed in descending
/// lexicographic order of `nu`.
pub fn branch(lambda: &Partition, k: usize) -> Result<Vec<(Partition, BigInt)>> {
    let lam = require_strict(lambda, k)?;
    let mut out = Vec::new();
    for parts in strict_interlacing_rows(lam.parts()) {
        let nu = Partition::new(parts).expect("generated rows are partitions");
        let wedge = nabla(&lam, &nu)?;
        out.push((nu, BigInt::one() << wedge));
    }
    Ok(out)
}

/// A twisted Gelfand-Tsetlin diagram: a chain of strict partitions
/// with `k, k-1, ..., 1` parts, stored top row (`lambda` itself)
/// first, consecutive rows interlacing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GTDiagram {
    rows: Vec<Partition>,
}

impl GTDiagram {
    /// Validates the row lengths, strictness of every row, and
    /// interlacing of every consecutive pair.
    pub fn new(rows: Vec<Partition>) -> Result<Self> {
        let k = rows.len();
        if k == 0 || rows[0].num_parts() != k {
            return Err(Error::DimensionMismatch {
                expected: k,
                found: rows.first().map_or(0, Partition::num_parts),
            });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.num_parts() != k - i {
                return Err(Error::DimensionMismatch {
                    expected: k - i,
                    found: row.num_parts(),
                });
            }
            if !row.is_strict() {
                return Err(Error::NotStrict(row.to_string()));
            }
        }
        for pair in rows.windows(2) {
            if !interlaces(&pair[1], &pair[0])? {
                return Err(Error::NotInterlacing(format!("{} vs {}", pair[1], pair[0])));
            }
        }
        Ok(GTDiagram { rows })
    }

    /// Rows from the top (`k` parts) down to the single-part bottom.
    pub fn rows(&self) -> &[Partition] {
        &self.rows
    }

    /// The sum of [`nabla`] over all consecutive row pairs.
    pub fn nabla_total(&self) -> usize {
        self.rows
            .windows(2)
            .map(|pair| nabla(&pair[0], &pair[1]).expect("validated diagram"))
            .sum()
    }

    /// The weight `(beta_1, ..., beta_k)` with `beta_m` the difference
    /// between the `m`-part row sum and the `(m-1)`-part row sum.
    pub fn weight(&self) -> Weight {
        let k = self.rows.len();
        let mut coords = Vec::with_capacity(k);
        for m in 1..=k {
            let here = self.rows[k - m].size();
            let below = if m == 1 { 0 } else { self.rows[k - m + 1].size() };
            coords.push(here - below);
        }
        Weight::new(coords)
    }

    /// JSON list-of-lists, top row first, e.g. `[[2,1,0],[2,1],[2]]`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    serde_json::Value::Array(
                        row.parts()
                            .iter()
                            .map(|&p| serde_json::Value::Number(p.into()))
                            .collect(),
                    )
                })
                .collect(),
        )
    }
}

/// The weight of a diagram; see [`GTDiagram::weight`].
pub fn gt_weight(diagram: &GTDiagram) -> Weight {
    diagram.weight()
}

/// Every twisted Gelfand-Tsetlin diagram with top row `lambda`
/// (padded to `k` parts).  Depth-first: each successive row is chosen
/// in descending lexicographic order, so the output order is
/// deterministic.
pub fn enumerate_gt(lambda: &Partition, k: usize) -> Result<Vec<GTDiagram>> {
    let lam = require_strict(lambda, k)?;
    let mut out = Vec::new();
    let mut stack = vec![lam];
    grow(&mut stack, &mut out);
    return Ok(out);

    fn grow(stack: &mut Vec<Partition>, out: &mut Vec<GTDiagram>) {
        let last = stack.last().expect("nonempty chain");
        if last.num_parts() == 1 {
            out.push(GTDiagram {
                rows: stack.clone(),
            });
            return;
        }
        for parts in strict_interlacing_rows(last.parts()) {
            stack.push(Partition::new(parts).expect("generated rows are partitions"));
            grow(stack, out);
            stack.pop();
        }
    }
}

/// Dimension of the twisted representation as a diagram sum:
/// `sum over diagrams of 2^nabla(D)`.
pub fn twisted_dim_via_gt(lambda: &Partition, k: usize) -> Result<BigInt> {
    let mut total = BigInt::from(0);
    for d in enumerate_gt(lambda, k)? {
        total += BigInt::one() << d.nabla_total();
    }
    Ok(total)
}

/// Weight multiplicity as a diagram sum: only diagrams whose row-sum
/// differences give `beta` contribute, each by `2^nabla(D)`.
pub fn twisted_mult_via_gt(lambda: &Partition, k: usize, beta: &Weight) -> Result<BigInt> {
    if beta.dim() != k {
        return Err(Error::DimensionMismatch {
            expected: k,
            found: beta.dim(),
        });
    }
    let mut total = BigInt::from(0);
    for d in enumerate_gt(lambda, k)? {
        if &d.weight() == beta {
            total += BigInt::one() << d.nabla_total();
        }
    }
    Ok(total)
}

/// Groups the diagram sum by weight: weight -> total `2^nabla`
/// contribution.  One enumeration pass instead of one per weight.
pub fn gt_weight_table(lambda: &Partition, k: usize) -> Result<BTreeMap<Weight, BigInt>> {
    let mut table = BTreeMap::new();
    for d in enumerate_gt(lambda, k)? {
        *table.entry(d.weight()).or_insert_with(|| BigInt::from(0)) +=
            BigInt::one() << d.nabla_total();
    }
    Ok(table)
}
