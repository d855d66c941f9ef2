//! Sparse multivariate polynomials over arbitrary-precision rationals.
//!
//! Variables are `t1 .. tk` (0-indexed internally). Monomials are ordered in
//! graded lexicographic order with `t1 > t2 > ... > tk`: higher total degree
//! wins, and within a degree the lexicographically larger exponent vector
//! wins, so `t1^2 > t1*t2 > t2^2`. Display lists terms in descending order.
//!
//! [`LinearForm`] is a nonzero homogeneous degree-one polynomial stored as a
//! coefficient vector. Divisibility of a polynomial by a linear form is
//! decided by restricting to the hyperplane where the form vanishes
//! ([`Polynomial::restrict_to_hyperplane`]); an independent synthetic
//! division routine ([`Polynomial::div_exact_linear`]) produces the actual
//! quotient.

use num::{BigRational, One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Exact rational scalar used throughout the crate.
pub type Rational = BigRational;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(n.into())
}

/// Shorthand for `n/d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    BigRational::new(n.into(), d.into())
}

/// Errors from polynomial-level constructors.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    /// A linear form must have at least one nonzero coefficient.
    #[error("linear form must be nonzero")]
    ZeroLinearForm,
    /// Conversion to a linear form requires a homogeneous degree-one input.
    #[error("polynomial is not homogeneous of degree one")]
    NotLinear,
}

/// A power product of the variables, stored as an exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    /// Monomial with the given exponents.
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The constant monomial 1 in `vars` variables.
    pub fn constant(vars: usize) -> Self {
        Monomial { exps: vec![0; vars] }
    }

    /// Single variable `t(i+1)`.
    pub fn variable(vars: usize, i: usize) -> Self {
        assert!(i < vars, "variable index out of range");
        let mut exps = vec![0; vars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn vars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Product of two monomials (component-wise exponent sum).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        assert_eq!(self.exps.len(), other.exps.len(), "mixed variable counts");
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_constant() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "t{}", i + 1)?;
            } else {
                write!(f, "t{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// All monomials in `vars` variables of total degree exactly `d`, listed in
/// descending graded lexicographic order (`t1^d` first).
pub fn monomial_basis(vars: usize, d: usize) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(monomial_count(vars, d));
    let mut exps = vec![0u32; vars];
    fill_basis(&mut out, &mut exps, 0, d);
    out
}

fn fill_basis(out: &mut Vec<Monomial>, exps: &mut Vec<u32>, var: usize, rem: usize) {
    if var + 1 == exps.len() {
        exps[var] = rem as u32;
        out.push(Monomial::new(exps.clone()));
        exps[var] = 0;
        return;
    }
    for e in (0..=rem).rev() {
        exps[var] = e as u32;
        fill_basis(out, exps, var + 1, rem - e);
    }
    exps[var] = 0;
}

/// Number of degree-`d` monomials in `vars` variables, `C(d+vars-1, vars-1)`.
pub fn monomial_count(vars: usize, d: usize) -> usize {
    assert!(vars >= 1);
    binomial(d + vars - 1, vars - 1)
}

/// Binomial coefficient as usize. Panics on overflow, which does not occur
/// in the ranges this crate works with.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    usize::try_from(acc).expect("binomial overflow")
}

/// Sparse polynomial with exact rational coefficients.
///
/// The zero polynomial stores no terms. All arithmetic requires matching
/// variable counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    vars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(vars: usize) -> Self {
        Polynomial { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: usize) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: usize, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::constant(vars), c);
        }
        p
    }

    /// The variable `t(i+1)` as a polynomial.
    pub fn variable(vars: usize, i: usize) -> Self {
        let mut p = Self::zero(vars);
        p.terms.insert(Monomial::variable(vars, i), Rational::one());
        p
    }

    /// Build from (monomial, coefficient) pairs; repeated monomials are
    /// summed and zero coefficients dropped.
    pub fn from_terms<I>(vars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            p.add_term(&m, &c);
        }
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// True if every term has total degree `d`. The zero polynomial is
    /// homogeneous of every degree.
    pub fn is_homogeneous(&self, d: usize) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    /// Number of stored (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `m` (zero if absent).
    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Terms in descending monomial order (display order).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    /// Value at the origin, i.e. the constant coefficient.
    pub fn eval_at_zero(&self) -> Rational {
        self.coeff(&Monomial::constant(self.vars))
    }

    fn add_term(&mut self, m: &Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        assert_eq!(m.vars(), self.vars, "mixed variable counts");
        let entry = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(m);
        }
    }

    /// Multiply by a scalar.
    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.vars);
        }
        Polynomial {
            vars: self.vars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Multiply by a single term.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.vars);
        }
        Polynomial {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(mm, a)| (mm.mul(m), a * c))
                .collect(),
        }
    }

    /// Substitute the pivot variable of `form` by the solution of
    /// `form = 0`, producing the restriction of `self` to that hyperplane.
    /// The result uses the same variable count; the pivot variable no longer
    /// occurs in it. Restriction is a ring homomorphism, and `form` divides
    /// `self` exactly when the restriction is zero.
    pub fn restrict_to_hyperplane(&self, form: &LinearForm) -> Polynomial {
        assert_eq!(self.vars, form.vars(), "mixed variable counts");
        let p = form.pivot();
        let sub = form.pivot_solution();
        let max_e = self
            .terms
            .keys()
            .map(|m| m.exponents()[p])
            .max()
            .unwrap_or(0) as usize;
        // powers of the substitution polynomial, sub^0 .. sub^max_e
        let mut pows = Vec::with_capacity(max_e + 1);
        pows.push(Polynomial::one(self.vars));
        for i in 1..=max_e {
            let next = &pows[i - 1] * &sub;
            pows.push(next);
        }
        let mut out = Polynomial::zero(self.vars);
        for (m, c) in &self.terms {
            let e = m.exponents()[p] as usize;
            let mut rest = m.exponents().to_vec();
            rest[p] = 0;
            out = &out + &pows[e].mul_term(&Monomial::new(rest), c);
        }
        out
    }

    /// Exact division by a linear form via synthetic division in the pivot
    /// variable. Returns `None` when the remainder is nonzero.
    pub fn div_exact_linear(&self, form: &LinearForm) -> Option<Polynomial> {
        assert_eq!(self.vars, form.vars(), "mixed variable counts");
        if self.is_zero() {
            return Some(Polynomial::zero(self.vars));
        }
        let p = form.pivot();
        let s = form.pivot_solution(); // form = c_p * (t_p - s)
        let c_p = form.coeff(p);
        // split self = sum_j f_j * t_p^j with pivot-free f_j
        let dmax = self
            .terms
            .keys()
            .map(|m| m.exponents()[p] as usize)
            .max()
            .unwrap();
        let mut layers = vec![Polynomial::zero(self.vars); dmax + 1];
        for (m, c) in &self.terms {
            let e = m.exponents()[p] as usize;
            let mut rest = m.exponents().to_vec();
            rest[p] = 0;
            layers[e].add_term(&Monomial::new(rest), c);
        }
        // divide by (t_p - s): q_{j-1} = f_j + q_j * s, remainder f_0 + q_0 * s
        let t_p = Monomial::variable(self.vars, p);
        let mut quotient = Polynomial::zero(self.vars);
        let mut carry = Polynomial::zero(self.vars); // q_j while descending
        for j in (1..=dmax).rev() {
            carry = &layers[j] + &(&carry * &s);
            let mut tp_pow = Monomial::constant(self.vars);
            for _ in 0..(j - 1) {
                tp_pow = tp_pow.mul(&t_p);
            }
            quotient = &quotient + &carry.mul_term(&tp_pow, &Rational::one());
        }
        let remainder = &layers[0] + &(&carry * &s);
        if remainder.is_zero() {
            Some(quotient.scale(&c_p.recip()))
        } else {
            None
        }
    }

    /// True when `form` divides `self`.
    pub fn divisible_by(&self, form: &LinearForm) -> bool {
        self.restrict_to_hyperplane(form).is_zero()
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.vars, other.vars, "mixed variable counts");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m, c);
        }
        out
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, other: &Polynomial) -> Polynomial {
        self + &(-other)
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            vars: self.vars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.vars, other.vars, "mixed variable counts");
        let mut out = Polynomial::zero(self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(&m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    /// Canonical compact form: terms in descending graded-lex order joined
    /// by `+`/`-`, e.g. `3/2*t1^2*t2-t3` and `-t1+t2+t3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms_desc().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            let mag = c.abs();
            if m.is_constant() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", mag, m)?;
            }
        }
        Ok(())
    }
}

/// Nonzero homogeneous degree-one form `c1*t1 + ... + ck*tk`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    coeffs: Vec<Rational>,
}

impl LinearForm {
    /// Build from coefficients; fails on the zero vector.
    pub fn new(coeffs: Vec<Rational>) -> Result<Self, PolyError> {
        if coeffs.is_empty() || coeffs.iter().all(|c| c.is_zero()) {
            return Err(PolyError::ZeroLinearForm);
        }
        Ok(LinearForm { coeffs })
    }

    /// Convert a homogeneous degree-one polynomial.
    pub fn from_polynomial(p: &Polynomial) -> Result<Self, PolyError> {
        if p.is_zero() || !p.is_homogeneous(1) {
            return Err(PolyError::NotLinear);
        }
        let mut coeffs = vec![Rational::zero(); p.vars()];
        for (m, c) in p.terms() {
            let i = m
                .exponents()
                .iter()
                .position(|&e| e == 1)
                .expect("degree-one monomial");
            coeffs[i] = c.clone();
        }
        LinearForm::new(coeffs)
    }

    pub fn vars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    /// Index of the last nonzero coefficient; the variable eliminated by
    /// hyperplane restriction.
    pub fn pivot(&self) -> usize {
        self.coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .expect("linear form is nonzero")
    }

    /// The degree-one polynomial expressing the pivot variable on the
    /// hyperplane `self = 0`: `t_p = -(1/c_p) * sum_{i != p} c_i t_i`.
    pub fn pivot_solution(&self) -> Polynomial {
        let p = self.pivot();
        let c_p = &self.coeffs[p];
        let mut out = Polynomial::zero(self.vars());
        for (i, c) in self.coeffs.iter().enumerate() {
            if i == p || c.is_zero() {
                continue;
            }
            out.add_term(&Monomial::variable(self.vars(), i), &(-(c / c_p)));
        }
        out
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let mut out = Polynomial::zero(self.vars());
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out.add_term(&Monomial::variable(self.vars(), i), c);
            }
        }
        out
    }

    pub fn negated(&self) -> LinearForm {
        LinearForm {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// True when the two forms are nonzero scalar multiples of each other.
    pub fn is_proportional(&self, other: &LinearForm) -> bool {
        assert_eq!(self.vars(), other.vars());
        // ratio fixed by the pivot, then cross-check every coordinate
        let p = self.pivot();
        if other.coeffs[p].is_zero() {
            return false;
        }
        let r = &self.coeffs[p] / &other.coeffs[p];
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .all(|(a, b)| *a == b * &r)
    }

    /// Pairing with a vector, `sum_i c_i * v_i`.
    pub fn pairing(&self, v: &[Rational]) -> Rational {
        assert_eq!(v.len(), self.coeffs.len());
        self.coeffs
            .iter()
            .zip(v)
            .fold(Rational::zero(), |acc, (c, x)| acc + c * x)
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_polynomial())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lf(coeffs: &[i64]) -> LinearForm {
        LinearForm::new(coeffs.iter().map(|&c| rat(c)).collect()).unwrap()
    }

    #[test]
    fn monomial_order_is_graded_lex() {
        let a = Monomial::new(vec![2, 0]);
        let b = Monomial::new(vec![1, 1]);
        let c = Monomial::new(vec![0, 2]);
        assert!(a > b && b > c);
        assert!(Monomial::new(vec![0, 3]) > a, "degree dominates");
    }

    #[test]
    fn basis_is_descending_and_complete() {
        let basis = monomial_basis(2, 2);
        let names: Vec<String> = basis.iter().map(|m| m.to_string()).collect();
        assert_eq!(names, ["t1^2", "t1*t2", "t2^2"]);
        assert_eq!(monomial_basis(3, 4).len(), monomial_count(3, 4));
        assert_eq!(monomial_count(3, 4), 15);
    }

    #[test]
    fn display_is_canonical() {
        let t1 = Polynomial::variable(3, 0);
        let t2 = Polynomial::variable(3, 1);
        let t3 = Polynomial::variable(3, 2);
        let p = &(&(&t1 * &t1) * &t2).scale(&ratio(3, 2)) - &t3;
        assert_eq!(p.to_string(), "3/2*t1^2*t2-t3");
        let q = &(&t2 + &t3) - &t1;
        assert_eq!(q.to_string(), "-t1+t2+t3");
        assert_eq!(Polynomial::zero(3).to_string(), "0");
        assert_eq!(Polynomial::constant(3, ratio(-1, 2)).to_string(), "-1/2");
    }

    #[test]
    fn degree_of_zero_is_none() {
        assert_eq!(Polynomial::zero(2).degree(), None);
        let one = Polynomial::one(2);
        assert_eq!(one.degree(), Some(0));
        assert!(Polynomial::zero(2).is_homogeneous(3));
    }

    #[test]
    fn restriction_kills_multiples() {
        // (t2 - t1) * (t1 + 2 t2) restricted to t2 = t1 vanishes
        let t1 = Polynomial::variable(2, 0);
        let t2 = Polynomial::variable(2, 1);
        let alpha = lf(&[-1, 1]);
        let f = &(&t2 - &t1) * &(&t1 + &t2.scale(&rat(2)));
        assert!(f.restrict_to_hyperplane(&alpha).is_zero());
        assert!(f.divisible_by(&alpha));
        let g = &t1 * &t1;
        assert!(!g.divisible_by(&alpha));
    }

    #[test]
    fn division_matches_restriction() {
        let t1 = Polynomial::variable(2, 0);
        let t2 = Polynomial::variable(2, 1);
        let alpha = lf(&[-1, 1]);
        let f = &t2 * &(&t2 - &t1);
        let q = f.div_exact_linear(&alpha).expect("divisible");
        assert_eq!(&q * &alpha.to_polynomial(), f);
        assert_eq!(q, t2);
        assert!((&t1 * &t1).div_exact_linear(&alpha).is_none());
    }

    #[test]
    fn pivot_is_last_nonzero() {
        assert_eq!(lf(&[1, 0, 0]).pivot(), 0);
        assert_eq!(lf(&[1, -1, 0]).pivot(), 1);
        assert_eq!(lf(&[0, 0, 2]).pivot(), 2);
    }

    #[test]
    fn proportionality() {
        assert!(lf(&[1, -1]).is_proportional(&lf(&[-2, 2])));
        assert!(!lf(&[1, -1]).is_proportional(&lf(&[1, 1])));
    }

    #[test]
    fn linear_form_round_trip() {
        let alpha = lf(&[0, 2, -3]);
        let p = alpha.to_polynomial();
        assert_eq!(LinearForm::from_polynomial(&p).unwrap(), alpha);
        assert_eq!(alpha.to_string(), "2*t2-3*t3");
        let bad = Polynomial::one(3);
        assert_eq!(LinearForm::from_polynomial(&bad), Err(PolyError::NotLinear));
        assert_eq!(
            LinearForm::new(vec![Rational::zero(); 2]),
            Err(PolyError::ZeroLinearForm)
        );
    }
}
