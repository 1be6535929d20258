//! Sparse multivariate polynomials over the rationals.
//!
//! Used as a coefficient ring when the expansion engine runs with symbolic
//! equation parameters, so that resonance conditions come out as explicit
//! polynomials rather than numbers.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::exactnum::{Coeff, Rational};

/// Exponent vector; trailing zeros are trimmed so equal monomials compare
/// equal.
type Monomial = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Rational>,
}

fn trim(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

impl MPoly {
    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MPoly { terms }
    }

    /// The variable with index `var`.
    pub fn var(var: usize) -> Self {
        let mut m = vec![0; var + 1];
        m[var] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(m, Rational::one());
        MPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(m, c)| (m.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert_add(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let m = trim(m);
        let slot = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .keys()
            .map(|m| m.get(var).copied().unwrap_or(0))
            .max()
            .unwrap_or(0)
    }

    /// Replace variable `var` by the rational `value`.
    pub fn substitute(&self, var: usize, value: &Rational) -> Self {
        let mut out = MPoly::default();
        for (m, c) in &self.terms {
            let e = m.get(var).copied().unwrap_or(0);
            let mut m2 = m.clone();
            if var < m2.len() {
                m2[var] = 0;
            }
            out.insert_add(m2, c * &value.pow(e));
        }
        out
    }

    /// Coefficients of `var^0, var^1, …` as polynomials in the other variables.
    pub fn coefficients_in(&self, var: usize) -> Vec<MPoly> {
        let deg = self.degree_in(var) as usize;
        let mut out = vec![MPoly::default(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.get(var).copied().unwrap_or(0) as usize;
            let mut m2 = m.clone();
            if var < m2.len() {
                m2[var] = 0;
            }
            out[e].insert_add(m2, c.clone());
        }
        out
    }

    /// True when every term contains at least one of `vars`.
    pub fn lies_in_ideal_of_vars(&self, vars: &[usize]) -> bool {
        self.terms
            .keys()
            .all(|m| vars.iter().any(|&v| m.get(v).copied().unwrap_or(0) > 0))
    }

    /// Variables occurring in the polynomial.
    pub fn variables(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self
            .terms
            .keys()
            .flat_map(|m| m.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i))
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// If the polynomial is `c · var` for a single variable, returns
    /// `(var, c)`.
    pub fn as_scaled_var(&self) -> Option<(usize, Rational)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        let nonzero: Vec<_> = m.iter().enumerate().filter(|(_, &e)| e > 0).collect();
        match nonzero.as_slice() {
            [(v, 1)] => Some((*v, c.clone())),
            _ => None,
        }
    }

    /// Render with the given variable names.
    pub fn display_with<'a>(&'a self, names: &'a [&'a str]) -> impl fmt::Display + 'a {
        MPolyDisplay { p: self, names }
    }
}

struct MPolyDisplay<'a> {
    p: &'a MPoly,
    names: &'a [&'a str],
}

impl fmt::Display for MPolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.p.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (v, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = self.names.get(v).copied().unwrap_or("x");
                if e == 1 {
                    write!(f, "·{name}")?;
                } else {
                    write!(f, "·{name}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&[]))
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(mut self, rhs: MPoly) -> MPoly {
        for (m, c) in rhs.terms {
            self.insert_add(m, c);
        }
        self
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        self + (-rhs)
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

// Monomial exponents add under multiplication.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        let mut out = MPoly::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let n = ma.len().max(mb.len());
                let m: Monomial = (0..n)
                    .map(|i| ma.get(i).copied().unwrap_or(0) + mb.get(i).copied().unwrap_or(0))
                    .collect();
                out.insert_add(m, ca * cb);
            }
        }
        out
    }
}

impl Coeff for MPoly {
    const EXACT: bool = true;

    fn zero() -> Self {
        MPoly::default()
    }
    fn one() -> Self {
        MPoly::constant(Rational::one())
    }
    fn from_rational(r: &Rational) -> Self {
        MPoly::constant(r.clone())
    }
    fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return MPoly::default();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect(),
        }
    }
    fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }
    fn is_zero_in(&self, _scale: f64) -> bool {
        self.is_zero()
    }
    fn magnitude(&self) -> f64 {
        if self.is_zero() {
            0.0
        } else {
            1.0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn ring_identities() {
        let x = MPoly::var(0);
        let y = MPoly::var(1);
        let lhs = (x.clone() + y.clone()) * (x.clone() - y.clone());
        let rhs = x.clone() * x.clone() - y.clone() * y.clone();
        assert_eq!(lhs, rhs);
        assert!((x.clone() - x.clone()).is_zero());
        assert_eq!(x.scale(&rat(2, 3)).as_scaled_var(), Some((0, rat(2, 3))));
    }

    #[test]
    fn substitution_and_coefficients() {
        let x = MPoly::var(0);
        let y = MPoly::var(2);
        let p = x.clone() * y.clone() * y.clone() + x.scale(&rat(3, 1)) + MPoly::one();
        let q = p.substitute(0, &rat(2, 1));
        assert_eq!(q, y.clone() * y.clone().scale(&rat(2, 1)) + MPoly::constant(rat(7, 1)));
        let cs = p.coefficients_in(2);
        assert_eq!(cs.len(), 3);
        assert_eq!(cs[2], x);
        assert!(cs[1].is_zero());
        assert!(!p.lies_in_ideal_of_vars(&[0]));
        assert!((p - MPoly::one()).lies_in_ideal_of_vars(&[0]));
    }
}
