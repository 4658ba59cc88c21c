//! Vector-partition-function machinery: the positive-root matrix in
//! simple-root coordinates, unimodularity, simplicial base cones,
//! chamber signatures, exact polynomial fits of the q-count per
//! chamber, and the complete rank-2 closed forms.
//!
//! A point of the cone spanned by the columns is classified against
//! every base cone (the full-rank column `n`-subsets) as interior,
//! boundary, or outside; the resulting signature vector is constant
//! exactly on the cells of the common refinement, so equal signatures
//! identify points of the same chamber without ever constructing the
//! face lattice.  On each chamber the q-count is a single polynomial
//! in the root coordinates `a_1, ..., a_n` with coefficients in
//! `Q[q]`, which [`fit_chamber_polynomial`] recovers by exact
//! interpolation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lie_core::{RootSystemA, Weight};
use crate::linalg::{det_bigint, rank_rational, solve_exact};
use crate::partition_fn::{kostant_q, kostant_restricted_on_coords};
use crate::poly::{MPoly, QPoly};
use crate::{ChamberPoly, QPolynomial};

/// The `n x n(n+1)/2` matrix whose columns are the positive roots
/// written in simple-root coordinates, in the root order of
/// [`RootSystemA`].  Arbitrary integer matrices can also be wrapped
/// for unimodularity experiments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootMatrix {
    rows: usize,
    cols: Vec<Vec<i64>>,
}

impl RootMatrix {
    /// Wraps a row-major rectangular matrix.
    pub fn from_entries(entries: Vec<Vec<i64>>) -> Result<Self> {
        let rows = entries.len();
        if rows == 0 {
            return Err(Error::InvalidRank);
        }
        let width = entries[0].len();
        if width == 0 || entries.iter().any(|r| r.len() != width) {
            return Err(Error::DimensionMismatch {
                expected: width,
                found: entries.iter().map(Vec::len).find(|&l| l != width).unwrap_or(0),
            });
        }
        let cols = (0..width)
            .map(|j| entries.iter().map(|r| r[j]).collect())
            .collect();
        Ok(RootMatrix { rows, cols })
    }

    /// Number of rows (the rank `n`).
    pub fn num_rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn num_columns(&self) -> usize {
        self.cols.len()
    }

    /// Column `j` as a length-`n` vector.
    pub fn column(&self, j: usize) -> &[i64] {
        &self.cols[j]
    }

    /// Row-major copy of the entries.
    pub fn entries(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|i| self.cols.iter().map(|c| c[i]).collect())
            .collect()
    }

    /// The square submatrix on the given columns, row-major.
    fn submatrix(&self, columns: &[usize]) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| columns.iter().map(|&j| BigInt::from(self.cols[j][i])).collect())
            .collect()
    }
}

/// The positive-root matrix of rank `n`.
pub fn root_matrix(n: usize) -> Result<RootMatrix> {
    let rs = RootSystemA::new(n)?;
    let cols = (0..rs.num_positive_roots())
        .map(|j| rs.root_in_simple_coords(j))
        .collect();
    Ok(RootMatrix { rows: n, cols })
}

fn column_subsets(total: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(size);
    pick(0, total, size, &mut cur, &mut out);
    return out;

    fn pick(from: usize, total: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for j in from..=total - left {
            cur.push(j);
            pick(j + 1, total, left - 1, cur, out);
            cur.pop();
        }
    }
}

/// Does every maximal (`n x n`) minor lie in `{0, 1, -1}`?
pub fn is_unimodular(m: &RootMatrix) -> bool {
    if m.num_columns() < m.num_rows() {
        return false;
    }
    column_subsets(m.num_columns(), m.num_rows())
        .iter()
        .all(|s| det_bigint(&m.submatrix(s)).abs() <= BigInt::one())
}

/// The column `n`-subsets of full rank, i.e. the simplicial base
/// cones, in ascending lexicographic order of the index sets.
pub fn bases(m: &RootMatrix) -> Vec<Vec<usize>> {
    column_subsets(m.num_columns(), m.num_rows())
        .into_iter()
        .filter(|s| !det_bigint(&m.submatrix(s)).is_zero())
        .collect()
}

/// Position of a point relative to one base cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Membership {
    Interior,
    Boundary,
    Outside,
}

impl Membership {
    pub fn as_str(self) -> &'static str {
        match self {
            Membership::Interior => "interior",
            Membership::Boundary => "boundary",
            Membership::Outside => "outside",
        }
    }
}

impl std::fmt::Display for Membership {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Lifts integer root coordinates to the rational points used by
/// [`signature`].
pub fn rational_point(coords: &[i64]) -> Vec<BigRational> {
    coords
        .iter()
        .map(|&c| BigRational::from_integer(c.into()))
        .collect()
}

/// Classifies `point` against every base cone of `m`, in the order of
/// [`bases`].  Classification solves `M_sigma x = point` exactly: all
/// coordinates positive means interior, nonnegative with a zero means
/// boundary, a negative coordinate means outside.  Errors if the
/// point lies outside every base cone, i.e. outside the cone spanned
/// by the columns.
pub fn signature(m: &RootMatrix, point: &[BigRational]) -> Result<Vec<Membership>> {
    if point.len() != m.num_rows() {
        return Err(Error::DimensionMismatch {
            expected: m.num_rows(),
            found: point.len(),
        });
    }
    let mut sig = Vec::new();
    for base in bases(m) {
        let a: Vec<Vec<BigRational>> = (0..m.num_rows())
            .map(|i| {
                base.iter()
                    .map(|&j| BigRational::from_integer(m.cols[j][i].into()))
                    .collect()
            })
            .collect();
        let x = solve_exact(a, point.to_vec()).expect("base submatrix is invertible");
        let membership = if x.iter().any(|v| v.is_negative()) {
            Membership::Outside
        } else if x.iter().any(|v| v.is_zero()) {
            Membership::Boundary
        } else {
            Membership::Interior
        };
        sig.push(membership);
    }
    if sig.iter().all(|&s| s == Membership::Outside) {
        return Err(Error::OutsideCone);
    }
    Ok(sig)
}

/// A chamber located by sampling: the shared signature, the sample
/// points that produced it, and the polynomial fitted on them.
#[derive(Debug, Clone)]
pub struct Chamber {
    pub signature: Vec<Membership>,
    pub representatives: Vec<Vec<BigRational>>,
    pub fitted: Option<ChamberPoly>,
}

impl Chamber {
    /// JSON report: `{"signature": [...], "polynomial": {"a-exponents":
    /// {"q-exponent": "coeff"}}}` with exponent vectors rendered as
    /// comma-joined strings.  Key order is sorted, hence byte-stable.
    pub fn to_json(&self) -> serde_json::Value {
        let signature = serde_json::Value::Array(
            self.signature
                .iter()
                .map(|s| serde_json::Value::String(s.as_str().to_owned()))
                .collect(),
        );
        let polynomial = match &self.fitted {
            None => serde_json::Value::Null,
            Some(poly) => {
                let mut map = serde_json::Map::new();
                for (exps, coeff) in poly.terms() {
                    let key = exps
                        .iter()
                        .map(u32::to_string)
                        .collect::<Vec<_>>()
                        .join(",");
                    map.insert(key, coeff.to_json());
                }
                serde_json::Value::Object(map)
            }
        };
        let mut obj = serde_json::Map::new();
        obj.insert("signature".to_owned(), signature);
        obj.insert("polynomial".to_owned(), polynomial);
        serde_json::Value::Object(obj)
    }
}

/// All exponent vectors in `n` variables of total degree at most
/// `max_deg`, ordered by descending total degree and then descending
/// lexicographic order, so that fits on degenerate (lower-dimensional)
/// samples resolve ties toward the earlier variables.
fn graded_monomials(n: usize, max_deg: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fill(0, 0, max_deg, &mut cur, &mut out);
    out.sort_by(|x, y| {
        let dx: u32 = x.iter().sum();
        let dy: u32 = y.iter().sum();
        dy.cmp(&dx).then_with(|| y.cmp(x))
    });
    return out;

    fn fill(i: usize, used: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for e in 0..=max - used {
            cur[i] = e;
            fill(i + 1, used + e, max, cur, out);
        }
        cur[i] = 0;
    }
}

fn power(base: i64, exp: u32) -> BigRational {
    BigRational::from_integer(BigInt::from(base).pow(exp))
}

/// Evaluates a fitted chamber polynomial at integer root coordinates,
/// leaving `q` symbolic.
pub fn eval_chamber_poly(poly: &ChamberPoly, point: &[i64]) -> QPoly<BigRational> {
    assert_eq!(point.len(), poly.vars());
    let mut acc = QPoly::new();
    for (exps, coeff) in poly.terms() {
        let scale: BigRational = exps
            .iter()
            .zip(point)
            .map(|(&e, &p)| power(p, e))
            .product();
        acc += &coeff.scale(&scale);
    }
    acc
}

/// Fits one polynomial in the root coordinates, with coefficients in
/// `Q[q]`, through the q-counts at the given lattice points.  The
/// points must share a signature; total degree is capped at
/// `n(n-1)/2`.  A straddled sample shows up either as differing
/// signatures or as an inconsistent interpolation system, and both
/// are reported as errors rather than absorbed.
pub fn fit_chamber_polynomial(
    m: &RootMatrix,
    points: &[Vec<i64>],
    rs: &RootSystemA,
) -> Result<Chamber> {
    let n = m.num_rows();
    if rs.rank() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: rs.rank(),
        });
    }
    if points.is_empty() {
        return Err(Error::NotEnoughPoints { needed: 1, got: 0 });
    }
    let rational: Vec<Vec<BigRational>> = points.iter().map(|p| rational_point(p)).collect();
    let sig = signature(m, &rational[0])?;
    for p in &rational[1..] {
        if signature(m, p)? != sig {
            return Err(Error::StraddledSample);
        }
    }

    let max_deg = (n * (n - 1) / 2) as u32;
    let monomials = graded_monomials(n, max_deg);
    let mut matrix = Vec::with_capacity(points.len());
    let mut rhs = Vec::with_capacity(points.len());
    for p in points {
        matrix.push(
            monomials
                .iter()
                .map(|e| e.iter().zip(p).map(|(&e, &c)| power(c, e)).product())
                .collect(),
        );
        let mu = rs.from_root_coords(p)?;
        rhs.push(
            kostant_q(rs, &mu)?
                .map_coeffs(|c: &BigInt| BigRational::from_integer(c.clone())),
        );
    }
    let solution = solve_exact(matrix, rhs).ok_or(Error::StraddledSample)?;

    let mut poly = MPoly::new(n);
    for (exps, coeff) in monomials.into_iter().zip(solution) {
        poly.add_term(exps, coeff);
    }
    Ok(Chamber {
        signature: sig,
        representatives: rational,
        fitted: Some(poly),
    })
}

/// The complete rank-2 case split for the q-count, straight from the
/// two top-dimensional chambers, the three rays, and the origin.  In
/// root coordinates `(a_1, a_2)` of the trace-zero weight:
///
/// * `a_1 > a_2 > 0`: `(a_2 - 1) q^3 + 2 q^2`
/// * `a_2 > a_1 > 0`: `(a_1 - 1) q^3 + 2 q^2`
/// * `a_1 = a_2 > 0`: `(a_1 - 1) q^3 + q^2 + q`
/// * exactly one of `a_1, a_2` positive, the other zero: `q`
/// * `a_1 = a_2 = 0`: `1`
/// * anything negative: `0`
pub fn a2_closed_form(mu: &Weight) -> Result<QPolynomial> {
    let rs = RootSystemA::new(2)?;
    let a = rs.to_root_coords(mu)?;
    let (a1, a2) = (a[0], a[1]);
    let mut poly = QPolynomial::new();
    if a1 < 0 || a2 < 0 {
        return Ok(poly);
    }
    match (a1, a2) {
        (0, 0) => poly.add_term(0, BigInt::one()),
        (_, 0) | (0, _) => poly.add_term(1, BigInt::one()),
        _ if a1 == a2 => {
            poly.add_term(3, BigInt::from(a1 - 1));
            poly.add_term(2, BigInt::one());
            poly.add_term(1, BigInt::one());
        }
        _ => {
            poly.add_term(3, BigInt::from(a1.min(a2) - 1));
            poly.add_term(2, BigInt::from(2));
        }
    }
    Ok(poly)
}

/// One tested pair of points for [`coarsening_witness`].
#[derive(Debug, Clone)]
pub struct CoarseningCheck {
    /// Root coordinates of the two points.
    pub points: (Vec<i64>, Vec<i64>),
    /// Did the two points share a full-matrix signature?
    pub same_signature: bool,
    /// Lattice points actually interpolated (both clusters).
    pub grid_points: usize,
    /// For same-signature pairs: did one polynomial of the expected
    /// degree fit the restricted counts around both points?  `None`
    /// when the signatures differ, so the claim does not apply.
    pub consistent: Option<bool>,
}

/// Report for one column subset `J`.
#[derive(Debug, Clone)]
pub struct CoarseningReport {
    pub j: Vec<usize>,
    /// Fit degree: number of columns in `J` minus the rank of `M_J`.
    pub degree: usize,
    pub checks: Vec<CoarseningCheck>,
}

impl CoarseningReport {
    /// True when no applicable pair failed the common-polynomial test.
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.consistent != Some(false))
    }
}

/// Tests that the chambers of the full matrix refine the polynomial
/// domains of the restricted count on the column subset `j`: for each
/// pair of weights with identical full-matrix signatures, the
/// restricted counts on lattice grids deep inside both neighbourhoods
/// must satisfy one polynomial of degree `|J| - rank(M_J)`.
pub fn coarsening_witness(
    rs: &RootSystemA,
    j: &[usize],
    mu_pairs: &[(Weight, Weight)],
) -> Result<CoarseningReport> {
    let n = rs.rank();
    if n > 3 {
        return Err(Error::UnsupportedRank(n));
    }
    let num_roots = rs.num_positive_roots();
    let mut j: Vec<usize> = j.to_vec();
    j.sort_unstable();
    j.dedup();
    if let Some(&bad) = j.iter().find(|&&idx| idx >= num_roots) {
        return Err(Error::InvalidRootIndex(bad, num_roots));
    }
    let m = root_matrix(n)?;
    let j_columns: Vec<Vec<BigRational>> = (0..n)
        .map(|i| j.iter().map(|&c| BigRational::from_integer(m.cols[c][i].into())).collect())
        .collect();
    let rank = rank_rational(j_columns);
    let degree = j.len() - rank;

    let monomials = graded_monomials(n, degree as u32);
    let scale = 3 * degree as i64 + 2;
    let mut checks = Vec::new();
    for (mu, nu) in mu_pairs {
        let a_mu = rs.to_root_coords(mu)?;
        let a_nu = rs.to_root_coords(nu)?;
        let sig_mu = signature(&m, &rational_point(&a_mu))?;
        let sig_nu = signature(&m, &rational_point(&a_nu))?;
        if sig_mu != sig_nu {
            checks.push(CoarseningCheck {
                points: (a_mu, a_nu),
                same_signature: false,
                grid_points: 0,
                consistent: None,
            });
            continue;
        }
        let mut grid = Vec::new();
        for base in [&a_mu, &a_nu] {
            let anchor: Vec<i64> = base.iter().map(|&c| scale * c).collect();
            for offset in graded_monomials(n, degree as u32) {
                let candidate: Vec<i64> = anchor
                    .iter()
                    .zip(&offset)
                    .map(|(&c, &d)| c + d as i64)
                    .collect();
                if matches!(signature(&m, &rational_point(&candidate)), Ok(s) if s == sig_mu) {
                    grid.push(candidate);
                }
            }
        }
        let matrix: Vec<Vec<BigRational>> = grid
            .iter()
            .map(|p| {
                monomials
                    .iter()
                    .map(|e| e.iter().zip(p).map(|(&e, &c)| power(c, e)).product())
                    .collect()
            })
            .collect();
        let rhs: Vec<BigRational> = grid
            .iter()
            .map(|p| BigRational::from_integer(kostant_restricted_on_coords(rs, &j, p)))
            .collect();
        let consistent = solve_exact(matrix, rhs).is_some();
        checks.push(CoarseningCheck {
            points: (a_mu, a_nu),
            same_signature: true,
            grid_points: grid.len(),
            consistent: Some(consistent),
        });
    }
    Ok(CoarseningReport { j, degree, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use Membership::{Boundary, Interior, Outside};

    fn rs(n: usize) -> RootSystemA {
        RootSystemA::new(n).unwrap()
    }

    #[test]
    fn root_matrices_have_consecutive_ones_columns() {
        assert_eq!(root_matrix(1).unwrap().entries(), vec![vec![1]]);
        assert_eq!(
            root_matrix(2).unwrap().entries(),
            vec![vec![1, 1, 0], vec![0, 1, 1]]
        );
        let m3 = root_matrix(3).unwrap();
        assert_eq!(m3.num_rows(), 3);
        assert_eq!(m3.num_columns(), 6);
        for jcol in 0..6 {
            let col = m3.column(jcol);
            let ones: Vec<usize> = (0..3).filter(|&i| col[i] == 1).collect();
            assert!(col.iter().all(|&v| v == 0 || v == 1));
            assert!(!ones.is_empty());
            assert!(ones.windows(2).all(|w| w[1] == w[0] + 1), "run of ones");
        }
    }

    #[test]
    fn columns_are_nonzero_and_nonnegative() {
        // Guarantees the kernel meets the nonnegative orthant only at 0.
        for n in 1..=4 {
            let m = root_matrix(n).unwrap();
            for jcol in 0..m.num_columns() {
                let col = m.column(jcol);
                assert!(col.iter().all(|&v| v >= 0));
                assert!(col.iter().any(|&v| v != 0));
            }
        }
    }

    #[test]
    fn root_matrices_are_unimodular_up_to_rank_four() {
        for n in 1..=4 {
            assert!(is_unimodular(&root_matrix(n).unwrap()), "n = {n}");
        }
    }

    #[test]
    fn a_determinant_two_matrix_is_not_unimodular() {
        let m = RootMatrix::from_entries(vec![vec![1, 1], vec![-1, 1]]).unwrap();
        assert!(!is_unimodular(&m));
    }

    #[test]
    fn base_counts() {
        assert_eq!(bases(&root_matrix(1).unwrap()).len(), 1);
        assert_eq!(bases(&root_matrix(2).unwrap()).len(), 3);
        assert_eq!(bases(&root_matrix(3).unwrap()).len(), 16);
    }

    #[test]
    fn signature_examples_for_rank_two() {
        let m = root_matrix(2).unwrap();
        // Bases in index order: {a1, a1+a2}, {a1, a2}, {a1+a2, a2}.
        assert_eq!(
            signature(&m, &rational_point(&[2, 1])).unwrap(),
            vec![Interior, Interior, Outside]
        );
        assert_eq!(
            signature(&m, &rational_point(&[1, 1])).unwrap(),
            vec![Boundary, Interior, Boundary]
        );
        // The mirror point flips the role of the two outer bases.
        assert_eq!(
            signature(&m, &rational_point(&[1, 2])).unwrap(),
            vec![Outside, Interior, Interior]
        );
        assert!(matches!(
            signature(&m, &rational_point(&[-1, 2])),
            Err(Error::OutsideCone)
        ));
    }

    #[test]
    fn signatures_are_scale_invariant() {
        let m = root_matrix(2).unwrap();
        for point in [[2, 1], [1, 1], [1, 0], [3, 2], [5, 5]] {
            let base = signature(&m, &rational_point(&point)).unwrap();
            for s in [3, 7] {
                let scaled: Vec<i64> = point.iter().map(|&c| s * c).collect();
                assert_eq!(signature(&m, &rational_point(&scaled)).unwrap(), base);
            }
        }
    }

    #[test]
    fn fitted_top_chambers_match_the_closed_form_tables() {
        let m = root_matrix(2).unwrap();
        let rs2 = rs(2);
        // a1 > a2 > 0.
        let tau1 = fit_chamber_polynomial(
            &m,
            &[vec![2, 1], vec![3, 1], vec![3, 2], vec![4, 1], vec![4, 3], vec![5, 2]],
            &rs2,
        )
        .unwrap();
        let p1 = tau1.fitted.clone().unwrap();
        let rat = |v: i64| BigRational::from_integer(v.into());
        let mut expected1 = MPoly::new(2);
        expected1.add_term(vec![0, 1], QPoly::monomial(3, rat(1)));
        let mut tail = QPoly::monomial(2, rat(2));
        tail.add_term(3, rat(-1));
        expected1.add_term(vec![0, 0], tail.clone());
        assert_eq!(p1, expected1);

        // a2 > a1 > 0 is the mirror image.
        let tau2 = fit_chamber_polynomial(
            &m,
            &[vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 4], vec![3, 4], vec![2, 5]],
            &rs2,
        )
        .unwrap();
        let p2 = tau2.fitted.clone().unwrap();
        let mut expected2 = MPoly::new(2);
        expected2.add_term(vec![1, 0], QPoly::monomial(3, rat(1)));
        expected2.add_term(vec![0, 0], tail);
        assert_eq!(p2, expected2);
        assert_eq!(p1.permute_vars(&[1, 0]), p2);
    }

    #[test]
    fn fitted_rays_and_origin() {
        let m = root_matrix(2).unwrap();
        let rs2 = rs(2);
        let rat = |v: i64| BigRational::from_integer(v.into());

        let diag = fit_chamber_polynomial(
            &m,
            &[vec![1, 1], vec![2, 2], vec![3, 3], vec![4, 4]],
            &rs2,
        )
        .unwrap();
        let mut expected = MPoly::new(2);
        expected.add_term(vec![1, 0], QPoly::monomial(3, rat(1)));
        let mut tail = QPoly::monomial(2, rat(1));
        tail.add_term(1, rat(1));
        tail.add_term(3, rat(-1));
        expected.add_term(vec![0, 0], tail);
        assert_eq!(diag.fitted.unwrap(), expected);

        let ray = fit_chamber_polynomial(&m, &[vec![1, 0], vec![2, 0], vec![3, 0]], &rs2).unwrap();
        assert_eq!(
            ray.fitted.unwrap(),
            MPoly::monomial(2, vec![0, 0], QPoly::monomial(1, rat(1)))
        );

        let origin = fit_chamber_polynomial(&m, &[vec![0, 0]], &rs2).unwrap();
        assert_eq!(
            origin.fitted.unwrap(),
            MPoly::monomial(2, vec![0, 0], QPoly::monomial(0, rat(1)))
        );
    }

    #[test]
    fn fits_reproduce_the_count_on_held_out_points() {
        let m = root_matrix(2).unwrap();
        let rs2 = rs(2);
        let chamber = fit_chamber_polynomial(
            &m,
            &[vec![2, 1], vec![3, 1], vec![3, 2], vec![4, 1], vec![4, 3], vec![5, 2]],
            &rs2,
        )
        .unwrap();
        let poly = chamber.fitted.unwrap();
        for held_out in [[7, 2], [9, 5], [11, 3], [6, 5]] {
            let direct = kostant_q(&rs2, &rs2.from_root_coords(&held_out).unwrap())
                .unwrap()
                .map_coeffs(|c| BigRational::from_integer(c.clone()));
            assert_eq!(eval_chamber_poly(&poly, &held_out), direct, "{held_out:?}");
        }
    }

    #[test]
    fn straddled_samples_are_rejected() {
        let m = root_matrix(2).unwrap();
        let rs2 = rs(2);
        assert!(matches!(
            fit_chamber_polynomial(&m, &[vec![2, 1], vec![1, 2]], &rs2),
            Err(Error::StraddledSample)
        ));
        assert!(matches!(
            fit_chamber_polynomial(&m, &[], &rs2),
            Err(Error::NotEnoughPoints { .. })
        ));
    }

    #[test]
    fn closed_form_matches_enumeration_on_a_grid() {
        let rs2 = rs(2);
        for m1 in -6..=6i64 {
            for m2 in -6..=6i64 {
                let mu = Weight::new(vec![m1, m2, -m1 - m2]);
                assert_eq!(
                    a2_closed_form(&mu).unwrap(),
                    kostant_q(&rs2, &mu).unwrap(),
                    "mu = {mu}"
                );
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        let poly = |mu: [i64; 3]| a2_closed_form(&Weight::new(mu.to_vec())).unwrap().to_string();
        assert_eq!(poly([2, -1, -1]), "2q^2");
        assert_eq!(poly([1, 0, -1]), "q^2 + q");
        assert_eq!(poly([1, -1, 0]), "q");
        assert_eq!(poly([0, 0, 0]), "1");
        assert_eq!(poly([-1, 1, 0]), "0");
        assert_eq!(poly([3, 0, -3]), "2q^3 + q^2 + q");
    }

    #[test]
    fn kostant_values_on_the_first_chamber_are_linear() {
        // At q = 1 the count on a1 > a2 > 0 is a2 + 1.
        let rs2 = rs(2);
        for (a1, a2) in [(3i64, 1i64), (5, 2), (7, 4)] {
            let mu = rs2.from_root_coords(&[a1, a2]).unwrap();
            let count = crate::partition_fn::kostant(&rs2, &mu).unwrap();
            assert_eq!(count, BigInt::from(a2 + 1));
        }
    }

    #[test]
    fn coarsening_checks_for_rank_two() {
        let rs2 = rs(2);
        let w = |a: [i64; 2]| rs2.from_root_coords(&a).unwrap();

        // Full column set: the count itself, fitted linearly.
        let report = coarsening_witness(
            &rs2,
            &[0, 1, 2],
            &[(w([3, 1]), w([5, 2])), (w([1, 3]), w([2, 5]))],
        )
        .unwrap();
        assert_eq!(report.degree, 1);
        assert!(report.all_pass());
        assert!(report.checks.iter().all(|c| c.same_signature));

        // A single ray: restricted counts live on that ray only.
        let report = coarsening_witness(&rs2, &[0], &[(w([1, 0]), w([3, 0]))]).unwrap();
        assert_eq!(report.degree, 0);
        assert!(report.all_pass());
        assert_eq!(
            kostant_restricted_on_coords(&rs2, &[0], &[2, 1]),
            BigInt::zero()
        );
        assert_eq!(
            kostant_restricted_on_coords(&rs2, &[0], &[2, 0]),
            BigInt::one()
        );

        // The two simple roots: unique representation, constant count 1.
        let report = coarsening_witness(&rs2, &[0, 2], &[(w([2, 1]), w([3, 1]))]).unwrap();
        assert_eq!(report.degree, 0);
        assert!(report.all_pass());

        // A pair in different chambers is reported as not applicable.
        let report = coarsening_witness(&rs2, &[0, 1, 2], &[(w([2, 1]), w([1, 2]))]).unwrap();
        assert_eq!(report.checks[0].same_signature, false);
        assert_eq!(report.checks[0].consistent, None);
        assert!(report.all_pass());
    }

    #[test]
    fn chamber_json_shape() {
        let m = root_matrix(2).unwrap();
        let rs2 = rs(2);
        let chamber =
            fit_chamber_polynomial(&m, &[vec![1, 0], vec![2, 0], vec![3, 0]], &rs2).unwrap();
        assert_eq!(
            chamber.to_json().to_string(),
            r#"{"polynomial":{"0,0":{"1":"1"}},"signature":["boundary","boundary","outside"]}"#
        );
    }
}
