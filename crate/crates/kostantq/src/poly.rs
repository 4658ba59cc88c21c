//! Exact sparse polynomial containers.
//!
//! * [`QPoly`] — univariate polynomials in `q`;
//! * [`MPoly`] — multivariate polynomials with a fixed variable count.
//!
//! Both are generic over a coefficient ring implementing [`Scalar`],
//! and `QPoly<C>` is itself a [`Scalar`], so towers like
//! `MPoly<QPoly<BigRational>>` — multivariate polynomials whose
//! coefficients are polynomials in `q` — come for free.  The concrete
//! aliases used by the rest of the crate live at the crate root.
//!
//! Coefficient maps never store zeros, so structural equality is
//! semantic equality and `is_zero` is an emptiness check.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

/// The coefficient-ring interface required by [`QPoly`] and [`MPoly`]:
/// exact ring arithmetic with reference-friendly accumulation.
///
/// Blanket-implemented; `BigInt`, `BigRational`, the built-in floats,
/// and `QPoly<C>` all qualify.
pub trait Scalar:
    Clone
    + fmt::Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + fmt::Debug
        + PartialEq
        + Zero
        + One
        + Neg<Output = Self>
        + Sub<Output = Self>
        + for<'a> AddAssign<&'a Self>
        + for<'a> SubAssign<&'a Self>
{
}

/// A sparse univariate polynomial in `q` with coefficients in `C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPoly<C> {
    coeffs: BTreeMap<u32, C>,
}

impl<C: Scalar> QPoly<C> {
    pub fn new() -> Self {
        QPoly {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(c: C) -> Self {
        let mut p = Self::new();
        p.add_term(0, c);
        p
    }

    pub fn monomial(exp: u32, c: C) -> Self {
        let mut p = Self::new();
        p.add_term(exp, c);
        p
    }

    /// The polynomial `q` itself.
    pub fn q() -> Self {
        Self::monomial(1, C::one())
    }

    /// Adds `c * q^exp`, dropping the entry if it cancels to zero.
    pub fn add_term(&mut self, exp: u32, c: C) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&exp) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    self.coeffs.remove(&exp);
                }
            }
            None => {
                self.coeffs.insert(exp, c);
            }
        }
    }

    /// The coefficient of `q^exp` (zero when absent).
    pub fn coeff(&self, exp: u32) -> C {
        self.coeffs.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    /// Exponent-to-coefficient view, ascending by exponent, no zeros.
    pub fn coeffs(&self) -> &BTreeMap<u32, C> {
        &self.coeffs
    }

    /// Degree in `q`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Horner evaluation at `x`.
    pub fn evaluate(&self, x: &C) -> C {
        let mut acc = C::zero();
        let mut prev_exp: Option<u32> = None;
        for (&exp, c) in self.coeffs.iter().rev() {
            if let Some(p) = prev_exp {
                for _ in exp..p {
                    acc = acc * x.clone();
                }
            }
            acc += c;
            prev_exp = Some(exp);
        }
        if let Some(p) = prev_exp {
            for _ in 0..p {
                acc = acc * x.clone();
            }
        }
        acc
    }

    /// Evaluation at `q = 1`: the coefficient sum.
    pub fn eval_at_one(&self) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.values() {
            acc += c;
        }
        acc
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::new();
        for (&exp, coeff) in &self.coeffs {
            out.add_term(exp, coeff.clone() * c.clone());
        }
        out
    }

    /// Applies `f` to every coefficient, re-normalizing zeros away.
    pub fn map_coeffs<D: Scalar>(&self, mut f: impl FnMut(&C) -> D) -> QPoly<D> {
        let mut out = QPoly::new();
        for (&exp, c) in &self.coeffs {
            out.add_term(exp, f(c));
        }
        out
    }

    /// JSON object mapping exponent strings to coefficient strings,
    /// e.g. `{"2": "2", "1": "1"}` for `2q^2 + q`.  Coefficients are
    /// rendered as decimal strings so consumers never overflow.
    pub fn to_json(&self) -> serde_json::Value
    where
        C: fmt::Display,
    {
        let mut map = serde_json::Map::new();
        for (e, c) in &self.coeffs {
            map.insert(e.to_string(), serde_json::Value::String(c.to_string()));
        }
        serde_json::Value::Object(map)
    }
}

impl<C: Scalar> Default for QPoly<C> {
    fn default() -> Self {
        Self::new()
    }
}

impl<C: Scalar> Zero for QPoly<C> {
    fn zero() -> Self {
        Self::new()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Scalar> One for QPoly<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<C: Scalar> AddAssign<&QPoly<C>> for QPoly<C> {
    fn add_assign(&mut self, rhs: &QPoly<C>) {
        for (&exp, c) in &rhs.coeffs {
            self.add_term(exp, c.clone());
        }
    }
}

impl<C: Scalar> SubAssign<&QPoly<C>> for QPoly<C> {
    fn sub_assign(&mut self, rhs: &QPoly<C>) {
        for (&exp, c) in &rhs.coeffs {
            self.add_term(exp, -c.clone());
        }
    }
}

impl<C: Scalar> Add for QPoly<C> {
    type Output = QPoly<C>;

    fn add(mut self, rhs: QPoly<C>) -> QPoly<C> {
        self += &rhs;
        self
    }
}

impl<C: Scalar> Sub for QPoly<C> {
    type Output = QPoly<C>;

    fn sub(mut self, rhs: QPoly<C>) -> QPoly<C> {
        self -= &rhs;
        self
    }
}

impl<C: Scalar> Neg for QPoly<C> {
    type Output = QPoly<C>;

    fn neg(self) -> QPoly<C> {
        let mut out = QPoly::new();
        for (exp, c) in self.coeffs {
            out.add_term(exp, -c);
        }
        out
    }
}

impl<C: Scalar> Mul<&QPoly<C>> for &QPoly<C> {
    type Output = QPoly<C>;

    fn mul(self, rhs: &QPoly<C>) -> QPoly<C> {
        let mut out = QPoly::new();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<C: Scalar> Mul for QPoly<C> {
    type Output = QPoly<C>;

    fn mul(self, rhs: QPoly<C>) -> QPoly<C> {
        &self * &rhs
    }
}

impl<C: Scalar + fmt::Display> fmt::Display for QPoly<C> {
    /// Descending powers with explicit signs, e.g. `q^2 + q` or
    /// `2q^3 - q`.  The zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&exp, c) in self.coeffs.iter().rev() {
            let (negative, magnitude) = split_sign(&c.to_string());
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write_term(f, &magnitude, &[(String::from("q"), exp)])?;
            first = false;
        }
        Ok(())
    }
}

/// A sparse multivariate polynomial with a fixed number of variables;
/// term keys are dense exponent vectors of that length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly<C> {
    vars: usize,
    terms: BTreeMap<Vec<u32>, C>,
}

impl<C: Scalar> MPoly<C> {
    pub fn new(vars: usize) -> Self {
        MPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, c: C) -> Self {
        let mut p = Self::new(vars);
        p.add_term(vec![0; vars], c);
        p
    }

    pub fn monomial(vars: usize, exps: Vec<u32>, c: C) -> Self {
        let mut p = Self::new(vars);
        p.add_term(exps, c);
        p
    }

    /// The variable `x_i` (0-based).
    pub fn var(vars: usize, i: usize) -> Self {
        assert!(i < vars, "variable index out of range");
        let mut exps = vec![0; vars];
        exps[i] = 1;
        Self::monomial(vars, exps, C::one())
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    /// Exponent-to-coefficient view in ascending lexicographic key
    /// order; no zero coefficients.
    pub fn terms(&self) -> &BTreeMap<Vec<u32>, C> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c * x^exps`, dropping the entry if it cancels.  Panics if
    /// the exponent vector has the wrong length.
    pub fn add_term(&mut self, exps: Vec<u32>, c: C) {
        assert_eq!(exps.len(), self.vars, "exponent vector length mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    /// The coefficient of `x^exps` (zero when absent).
    pub fn coeff(&self, exps: &[u32]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_assign_ref(&mut self, rhs: &MPoly<C>) {
        assert_eq!(self.vars, rhs.vars, "variable counts differ");
        for (exps, c) in &rhs.terms {
            self.add_term(exps.clone(), c.clone());
        }
    }

    pub fn sub_assign_ref(&mut self, rhs: &MPoly<C>) {
        assert_eq!(self.vars, rhs.vars, "variable counts differ");
        for (exps, c) in &rhs.terms {
            self.add_term(exps.clone(), -c.clone());
        }
    }

    pub fn mul_ref(&self, rhs: &MPoly<C>) -> MPoly<C> {
        assert_eq!(self.vars, rhs.vars, "variable counts differ");
        let mut out = MPoly::new(self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let exps: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(exps, c1.clone() * c2.clone());
            }
        }
        out
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &C) -> MPoly<C> {
        let mut out = MPoly::new(self.vars);
        for (exps, coeff) in &self.terms {
            out.add_term(exps.clone(), coeff.clone() * c.clone());
        }
        out
    }

    /// Evaluation with every variable set to 1: the coefficient sum.
    pub fn eval_all_ones(&self) -> C {
        let mut acc = C::zero();
        for c in self.terms.values() {
            acc += c;
        }
        acc
    }

    /// Largest total degree among the terms; `None` when zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// The lexicographically largest term (variable 0 weighs most).
    pub fn leading_term_lex(&self) -> Option<(&Vec<u32>, &C)> {
        self.terms.last_key_value()
    }

    /// Exact division by the binomial `x_i - x_j` (`i < j`, so `x_i`
    /// is the lex-leading monomial of the divisor).  Returns `None`
    /// when a nonzero remainder would be left, i.e. the divisor does
    /// not divide `self`.
    pub fn divide_exact_by_binomial(&self, i: usize, j: usize) -> Option<MPoly<C>> {
        assert!(i < j && j < self.vars, "binomial indices out of range");
        let mut rem = self.clone();
        let mut quot = MPoly::new(self.vars);
        while let Some((exps, c)) = rem.leading_term_lex() {
            if exps[i] == 0 {
                return None;
            }
            let mut qexp = exps.clone();
            qexp[i] -= 1;
            let qc = c.clone();
            // rem -= (x_i - x_j) * qc * x^qexp
            let mut cancel = qexp.clone();
            cancel[i] += 1;
            rem.add_term(cancel, -qc.clone());
            let mut swapped = qexp.clone();
            swapped[j] += 1;
            rem.add_term(swapped, qc.clone());
            quot.add_term(qexp, qc);
        }
        Some(quot)
    }

    /// Multiplication by the binomial `x_i + x_j`.
    pub fn mul_binomial_sum(&self, i: usize, j: usize) -> MPoly<C> {
        assert!(i < self.vars && j < self.vars, "indices out of range");
        let mut out = MPoly::new(self.vars);
        for (exps, c) in &self.terms {
            let mut a = exps.clone();
            a[i] += 1;
            out.add_term(a, c.clone());
            let mut b = exps.clone();
            b[j] += 1;
            out.add_term(b, c.clone());
        }
        out
    }

    /// Pulls the exponent `x_{perm[i]}` into slot `i`, i.e. relabels
    /// variables the same way a Weyl element permutes coordinates.
    pub fn permute_vars(&self, perm: &[usize]) -> MPoly<C> {
        assert_eq!(perm.len(), self.vars, "permutation length mismatch");
        let mut out = MPoly::new(self.vars);
        for (exps, c) in &self.terms {
            let permuted: Vec<u32> = perm.iter().map(|&p| exps[p]).collect();
            out.add_term(permuted, c.clone());
        }
        out
    }

    /// True when the polynomial is fixed by every variable swap
    /// (checked on adjacent transpositions, which generate them all).
    pub fn is_symmetric(&self) -> bool {
        let mut perm: Vec<usize> = (0..self.vars).collect();
        for i in 0..self.vars.saturating_sub(1) {
            perm.swap(i, i + 1);
            if self.permute_vars(&perm) != *self {
                return false;
            }
            perm.swap(i, i + 1);
        }
        true
    }

    /// Splits off the last variable: maps each exponent `d` of
    /// `x_{last}` to the polynomial in the remaining variables that
    /// multiplies `x_{last}^d`.  Summing the pieces recovers the
    /// specialization `x_{last} = 1`.
    pub fn split_last_var(&self) -> BTreeMap<u32, MPoly<C>> {
        assert!(self.vars >= 1, "no variable to split off");
        let mut grades: BTreeMap<u32, MPoly<C>> = BTreeMap::new();
        for (exps, c) in &self.terms {
            let (&d, head) = exps.split_last().expect("nonempty exponent vector");
            grades
                .entry(d)
                .or_insert_with(|| MPoly::new(self.vars - 1))
                .add_term(head.to_vec(), c.clone());
        }
        grades
    }

    /// Renders with the given variable stem, descending graded-lex,
    /// e.g. `x1^2*x2 + 2x3`.
    pub fn to_text(&self, stem: &str) -> String
    where
        C: fmt::Display,
    {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        let mut out = String::new();
        for (pos, exps) in keys.iter().enumerate() {
            let c = &self.terms[*exps];
            let (negative, magnitude) = split_sign(&c.to_string());
            if pos == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let factors: Vec<(String, u32)> = exps
                .iter()
                .enumerate()
                .map(|(i, &e)| (format!("{stem}{}", i + 1), e))
                .collect();
            let mut term = String::new();
            let mut sink = TermSink(&mut term);
            write_term(&mut sink, &magnitude, &factors).expect("string sink");
            out.push_str(&term);
        }
        out
    }
}

impl<C: Scalar + fmt::Display> fmt::Display for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text("x"))
    }
}

struct TermSink<'a>(&'a mut String);

impl fmt::Write for TermSink<'_> {
    fn write_str(&mut self, s: &str) -> fmt::Result {
        self.0.push_str(s);
        Ok(())
    }
}

/// Splits a rendered coefficient into (is-negative, magnitude text).
fn split_sign(rendered: &str) -> (bool, String) {
    match rendered.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, rendered.to_string()),
    }
}

/// Writes `magnitude * product of v^e factors`, eliding unit
/// coefficients and zero exponents, parenthesizing compound
/// coefficients (those containing spaces or slashes) next to
/// variables.
fn write_term(f: &mut dyn fmt::Write, magnitude: &str, factors: &[(String, u32)]) -> fmt::Result {
    let has_vars = factors.iter().any(|&(_, e)| e > 0);
    if !has_vars {
        return write!(f, "{magnitude}");
    }
    if magnitude != "1" {
        if magnitude.contains(' ') || magnitude.contains('/') {
            write!(f, "({magnitude})*")?;
        } else {
            write!(f, "{magnitude}")?;
        }
    }
    let mut first = true;
    for (name, e) in factors {
        if *e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        if *e == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{e}")?;
        }
        first = false;
    }
    Ok(())
}
